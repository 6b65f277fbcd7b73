#include "vgaml/binning.hpp"
#include "vgaml/cluster_eval.hpp"
#include "vgaml/csv.hpp"
#include "vgaml/dataset.hpp"
#include "vgaml/errors.hpp"
#include "vgaml/evaluation.hpp"
#include "vgaml/grid.hpp"
#include "vgaml/integration.hpp"
#include "vgaml/kmeans.hpp"
#include "vgaml/label_map.hpp"
#include "vgaml/learner.hpp"
#include "vgaml/measures.hpp"
#include "vgaml/parallel.hpp"
#include "vgaml/pca.hpp"
#include "vgaml/plan_ingest.hpp"
#include "vgaml/reference_graph.hpp"
#include "vgaml/run_config.hpp"
#include "vgaml/som.hpp"
#include "vgaml/study.hpp"
#include "vgaml/synthgen.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace vgaml;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

LabelMap load_labels(const std::string& path) {
    return path.empty() ? LabelMap::builtin() : LabelMap::from_csv(csv::read_file(path));
}

std::string legend_path_for(const std::string& grid_path) {
    fs::path p(grid_path);
    return (p.parent_path() / (p.stem().string() + ".legend.csv")).string();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    const fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    csv::write_file(path, content);
}

// Options shared between subcommands.
struct Common {
    std::string output;
    std::string labelmap;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

struct VgaArgs {
    std::vector<std::string> grids;
    std::string corner_rule = "touch";
    std::string entropy_sign = "printed";
    std::string plan_name;
};

struct ReferenceArgs {
    std::uint64_t k = 4;
    std::uint64_t max_k = 0;
    std::string kind;
};

struct PrepArgs {
    std::vector<std::string> inputs;
    std::string preset = "full10";
    std::string attributes;
    std::string pca_model;
};

struct PcaArgs {
    std::string input;
    double variance = 0.95;
    std::size_t components = 0;
    bool standardize = false;
    std::string transformed;
};

struct TrainArgs {
    std::string input;
    std::string learner = "tree";
    std::string pruning = "none";
    std::size_t min_leaf = kDefaultMinLeaf;
    std::size_t min_bucket = kDefaultMinBucket;
    double confidence = 0.25;
    std::size_t rep_folds = 3;
    std::string criterion = "gain";
    std::string nb_mode = "gaussian";
    std::size_t bins = 10;
    std::size_t folds = 10;
    bool dump_rules = false;
};

struct ClusterArgs {
    std::string input;
    std::string algo = "kmeans";
    std::size_t k = 0;
    std::string grid;
    std::string metric = "euclidean";
    std::size_t max_iter = 100;
    std::size_t epochs = 10;
    double rate = 0.5;
    double radius = -1;
    bool standardize = true;
    bool classes_to_clusters = false;
};

struct SynthArgs {
    std::size_t target = 0;
    std::string layouts;
    double strength = -1;
};

int run_vga(const Common& c, const VgaArgs& a) {
    if (a.grids.empty()) throw UsageError("vga: at least one grid file is required");
    VgaOptions opt;
    if (a.corner_rule == "touch") {
        opt.corner_rule = CornerRule::BlockOnTouch;
    } else if (a.corner_rule == "pinch") {
        opt.corner_rule = CornerRule::BlockOnPinch;
    } else {
        throw SchemaError("unknown corner rule '" + a.corner_rule + "'");
    }
    if (a.entropy_sign == "printed") {
        opt.relativised_sign = RelativisedSign::Printed;
    } else if (a.entropy_sign == "divergence") {
        opt.relativised_sign = RelativisedSign::Divergence;
    } else {
        throw SchemaError("unknown entropy sign '" + a.entropy_sign + "'");
    }
    opt.jobs = c.jobs;
    if (a.grids.size() > 1 && c.output.empty()) throw UsageError("vga: --output DIR is required for several grids");
    for (const auto& path : a.grids) {
        const auto legend = legend_path_for(path);
        const auto grid = parse_grid(csv::read_file(path), fs::exists(legend) ? csv::read_file(legend) : std::string());
        const auto stem = fs::path(path).stem().string();
        const auto measures = compute_all_measures(grid, opt);
        const auto text = write_plan_csv(to_plan_records(grid, measures, a.plan_name.empty() ? stem : a.plan_name));
        if (a.grids.size() == 1 && (c.output.empty() || fs::path(c.output).extension() == ".csv")) {
            write_output(c.output, text);
        } else {
            fs::create_directories(c.output);
            csv::write_file((fs::path(c.output) / (stem + ".csv")).string(), text);
        }
        std::cerr << stem << ": " << measures.size() << " nodes\n";
    }
    return 0;
}

int run_reference(const Common& c, const ReferenceArgs& a) {
    const auto last = std::max(a.k, a.max_k);
    if (!a.kind.empty()) {
        const auto g = build_reference_graph(parse_reference_kind(a.kind), a.k);
        std::string out = "a,b\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (auto j : g.adjacency[i]) {
                if (i < j) out += std::to_string(i) + "," + std::to_string(j) + "\n";
            }
        }
        write_output(c.output, out);
        return 0;
    }
    std::string out = "k,md_hh,md_pvalue,md_tekl\n";
    for (auto k = a.k; k <= last; ++k) {
        out += std::to_string(k);
        for (auto kind : kAllReferenceKinds) out += "," + csv::format_sig(reference_mean_depth(kind, k), 12);
        out += "\n";
    }
    write_output(c.output, out);
    return 0;
}

int run_study(const Common& c, const std::vector<std::string>& inputs) {
    if (c.output.empty()) throw UsageError("study: --output DIR is required");
    std::vector<PlanRecord> all;
    for (const auto& path : inputs) {
        auto records = parse_plan_csv(csv::read_file(path));
        all.insert(all.end(), records.begin(), records.end());
    }
    const auto study = integration_study(all);
    write_study(study, c.output);
    std::cerr << "study: " << study.rows.size() << " nodes\n";
    return 0;
}

int run_prep(const Common& c, const PrepArgs& a) {
    if (a.inputs.empty()) throw UsageError("prep: at least one measures CSV is required");
    const auto labels = load_labels(c.labelmap);
    std::vector<Dataset> parts;
    for (const auto& path : a.inputs) parts.push_back(dataset_from_records(parse_plan_csv(csv::read_file(path)), labels));
    const Dataset all = concatenate(parts);
    const auto preset = parse_preset(a.preset);
    Dataset out;
    if (preset == AttributePreset::Pca) {
        if (a.pca_model.empty()) throw UsageError("prep: the pca preset needs --pca-model");
        const auto model = pca_from_json(csv::read_file(a.pca_model));
        out = pca_transform(model, all);
    } else {
        const auto names = split_list(a.attributes);
        out = select_attributes(all, preset, names);
    }
    write_output(c.output, write_dataset_csv(out));
    std::cerr << "prep: " << out.size() << " instances, " << out.num_attributes() << " attributes\n";
    return 0;
}

int run_pca(const Common& c, const PcaArgs& a) {
    const auto ds = read_dataset_csv(csv::read_file(a.input));
    PcaStop stop;
    stop.variance_target = a.variance;
    stop.component_count = a.components;
    const auto model = pca_fit(ds, stop, a.standardize);
    write_output(c.output, pca_to_json(model));
    if (!a.transformed.empty()) write_output(a.transformed, write_dataset_csv(pca_transform(model, ds)));
    std::cerr << "pca: " << model.retained() << " components, " << csv::format_sig(model.retained_share() * 100, 6)
              << " % of the variance (" << (model.standardized ? "correlation" : "covariance") << ")\n";
    return 0;
}

int run_train(const Common& c, const TrainArgs& a) {
    const auto ds = read_dataset_csv(csv::read_file(a.input));
    LearnerConfig cfg;
    cfg.kind = parse_learner_kind(a.learner);
    cfg.min_bucket = a.min_bucket;
    cfg.nb_mode = parse_nb_mode(a.nb_mode);
    cfg.nb_bins = a.bins;
    cfg.tree.min_leaf = a.min_leaf;
    cfg.tree.criterion = parse_criterion(a.criterion);
    cfg.pruning.kind = parse_pruning(a.pruning);
    cfg.pruning.confidence = a.confidence;
    cfg.pruning.rep_folds = a.rep_folds;
    cfg.pruning.seed = c.seed;
    const auto learner = make_learner(cfg);
    const auto plan = stratified_folds(ds, a.folds, c.seed);
    const auto report = cross_validate(*learner, ds, plan, c.jobs);
    const auto model = learner->train(ds);
    if (!c.output.empty()) {
        export_report(report, c.output);
        csv::write_file((fs::path(c.output) / "model.json").string(), model->to_json());
        csv::write_file((fs::path(c.output) / "model.txt").string(), model->render());
    }
    if (a.dump_rules) {
        if (cfg.kind != LearnerKind::OneR) throw UsageError("--dump-rules applies to the oner learner");
        std::cout << model->render();
    }
    std::cout << "Correctly Classified Instances " << matrix_trace(report.matrix) << " "
              << format_accuracy(report.accuracy()) << "\n";
    std::cout << "Total Number of Instances " << matrix_total(report.matrix) << "\n";
    if (report.model.tree_size) {
        std::cout << "Size of the tree " << *report.model.tree_size << "\n";
        std::cout << "Number of Leaves " << *report.model.tree_leaves << "\n";
    }
    return 0;
}

int run_cluster(const Common& c, const ClusterArgs& a) {
    if (c.output.empty()) throw UsageError("cluster: --output DIR is required");
    auto ds = read_dataset_csv(csv::read_file(a.input));
    if (a.standardize) ds = apply_standardization(ds, fit_standardization(ds));
    const auto rows = numeric_rows(ds);
    std::vector<std::size_t> assign;
    std::size_t clusters = 0;
    std::string summary = "field,value\nalgo," + a.algo + "\nstandardized," + (a.standardize ? "true" : "false") +
                          "\nseed," + std::to_string(c.seed) + "\n";
    if (a.algo == "kmeans") {
        if (a.k == 0) throw UsageError("cluster: --k is required for kmeans");
        KMeansOptions opt{a.k, parse_metric(a.metric), c.seed, a.max_iter};
        const auto model = kmeans_fit(rows, opt);
        assign = model.assignments;
        clusters = a.k;
        summary += "k," + std::to_string(a.k) + "\nmetric," + a.metric + "\niterations," +
                   std::to_string(model.iterations) + "\nobjective," + csv::format_exact(model.objective()) + "\n";
    } else if (a.algo == "som") {
        std::size_t w = 0, h = 0;
        const auto x = a.grid.find('x');
        if (x == std::string::npos) throw UsageError("cluster: --grid WxH is required for som");
        w = std::stoul(a.grid.substr(0, x));
        h = std::stoul(a.grid.substr(x + 1));
        SomOptions opt{w, h, a.epochs, a.rate, a.radius, c.seed};
        const auto init = som_init(rows, opt);
        const auto lattice = som_fit(rows, opt);
        for (const auto& r : rows) assign.push_back(som_map(lattice, r));
        clusters = lattice.units();
        summary += "grid," + a.grid + "\nepochs," + std::to_string(a.epochs) + "\ninitial_quantization_error," +
                   csv::format_exact(quantization_error(init, rows)) + "\nquantization_error," +
                   csv::format_exact(quantization_error(lattice, rows)) + "\n";
    } else {
        throw SchemaError("unknown clustering algorithm '" + a.algo + "'");
    }
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < ds.size(); ++i) ids.push_back(ds.id(i));
    fs::create_directories(c.output);
    const fs::path dir(c.output);
    csv::write_file((dir / "assignments.csv").string(), render_assignments(ids, assign, ds.labels()));
    if (a.classes_to_clusters) {
        const auto ctc = classes_to_clusters(assign, ds.labels(), clusters);
        csv::write_file((dir / "clusters.csv").string(), render_cluster_table(ctc));
        csv::write_file((dir / "confusion.csv").string(), render_confusion_csv(ctc.confusion));
        summary += "correct," + std::to_string(ctc.correct) + "\naccuracy," + format_accuracy(ctc.accuracy()) + "\n";
        std::cout << "Classes to clusters accuracy " << format_accuracy(ctc.accuracy()) << "\n";
    }
    csv::write_file((dir / "summary.csv").string(), summary);
    return 0;
}

int run_report(const Common& c, const std::string& confusion_path) {
    const auto m = parse_confusion_csv(csv::read_file(confusion_path));
    const auto total = matrix_total(m);
    const double acc = total ? static_cast<double>(matrix_trace(m)) / static_cast<double>(total) : 0.0;
    if (!c.output.empty()) write_output(c.output, render_heatmap_csv(m));
    std::cout << "Correctly Classified Instances " << matrix_trace(m) << " " << format_accuracy(acc) << "\n";
    std::cout << "Total Number of Instances " << total << "\n";
    return 0;
}

int run_synth(const Common& c, const SynthArgs& a) {
    if (c.output.empty()) throw UsageError("synth: --output DIR is required");
    std::vector<std::size_t> targets;
    if (a.target > 0) targets.push_back(a.target);
    for (const auto& t : split_list(a.layouts)) targets.push_back(std::stoul(t));
    if (targets.empty()) targets = default_corpus_targets();
    fs::create_directories(c.output);
    std::vector<FloorPlanGrid> grids;
    for (std::size_t i = 0; i < targets.size(); ++i) grids.push_back(generate_office(c.seed + i, targets[i]));
    if (a.strength >= 0) {
        parallel_for(grids.size(), c.jobs, [&](std::size_t i) {
            grids[i] = plant_geometry_signal(grids[i], a.strength, c.seed + 1000 + i);
        });
    }
    for (std::size_t i = 0; i < grids.size(); ++i) {
        const auto [text, legend] = write_grid(grids[i]);
        const auto stem = "layout_" + std::to_string(i + 1);
        csv::write_file((fs::path(c.output) / (stem + ".grid")).string(), text);
        csv::write_file((fs::path(c.output) / (stem + ".legend.csv")).string(), legend);
        std::cerr << stem << ": " << grids[i].open_count() << " open cells\n";
    }
    return 0;
}

// Options present in a config file but not given on the command line are
// applied to the selected subcommand.
void apply_config(CLI::App& sub, const RunConfig& cfg) {
    for (const auto& [key, value] : cfg.values()) {
        auto* opt = sub.get_option_no_throw("--" + key);
        if (!opt || opt->count() > 0) continue;
        opt->add_result(value);
        opt->run_callback();
    }
}

int exit_code(ErrorKind kind) { return static_cast<int>(kind); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Visibility graph analysis and usage-class learning for floor plans"};
    app.require_subcommand(1);
    Common common;
    std::string config_path;

    auto add_common = [&](CLI::App* sub, bool output, bool seeded) {
        sub->add_option("--config", config_path, "flat key = value settings file");
        sub->add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);
        if (output) sub->add_option("--output,-o", common.output, "output file or directory");
        if (seeded) sub->add_option("--seed", common.seed, "random seed (required)");
    };

    VgaArgs vga;
    auto* vga_cmd = app.add_subcommand("vga", "compute visibility measures for grid files");
    vga_cmd->add_option("grids", vga.grids, "grid files; a sibling <name>.legend.csv supplies labels");
    vga_cmd->add_option("--corner-rule", vga.corner_rule, "touch | pinch");
    vga_cmd->add_option("--entropy-sign", vga.entropy_sign, "printed | divergence");
    vga_cmd->add_option("--plan-name", vga.plan_name, "ref prefix (single grid)");
    add_common(vga_cmd, true, false);

    ReferenceArgs ref;
    auto* ref_cmd = app.add_subcommand("reference", "reference-graph mean depths, or the edges of one graph");
    ref_cmd->add_option("--k", ref.k, "node count");
    ref_cmd->add_option("--max-k", ref.max_k, "tabulate k .. max-k");
    ref_cmd->add_option("--kind", ref.kind, "print the edge list of this graph (hh | p | tekl)");
    add_common(ref_cmd, true, false);

    std::vector<std::string> study_inputs;
    auto* study_cmd = app.add_subcommand("study", "integration study over measures CSVs");
    study_cmd->add_option("inputs", study_inputs, "measures CSVs")->required();
    add_common(study_cmd, true, false);

    PrepArgs prep;
    auto* prep_cmd = app.add_subcommand("prep", "group labels and build a dataset from measures CSVs");
    prep_cmd->add_option("inputs", prep.inputs, "measures CSVs");
    prep_cmd->add_option("--preset", prep.preset, "full10 | subset8 | pca | explicit");
    prep_cmd->add_option("--attributes", prep.attributes, "comma-separated names for the explicit preset");
    prep_cmd->add_option("--pca-model", prep.pca_model, "PCA model JSON for the pca preset");
    prep_cmd->add_option("--labelmap", common.labelmap, "raw_label,class CSV");
    add_common(prep_cmd, true, false);

    PcaArgs pca;
    auto* pca_cmd = app.add_subcommand("pca", "fit principal components of a dataset");
    pca_cmd->add_option("input", pca.input, "dataset CSV")->required();
    pca_cmd->add_option("--variance", pca.variance, "variance share to retain");
    pca_cmd->add_option("--components", pca.components, "fixed component count");
    pca_cmd->add_flag("--standardize", pca.standardize, "use standardized attributes");
    pca_cmd->add_option("--transformed", pca.transformed, "also write the projected dataset here");
    add_common(pca_cmd, true, false);

    TrainArgs train;
    auto* train_cmd = app.add_subcommand("train", "cross-validate a learner");
    train_cmd->add_option("input", train.input, "dataset CSV")->required();
    train_cmd->add_option("--learner", train.learner, "zeror | oner | nb | tree");
    train_cmd->add_option("--pruning", train.pruning, "none | rep | ebp");
    train_cmd->add_option("--min-leaf", train.min_leaf, "minimum instances per leaf");
    train_cmd->add_option("--min-bucket", train.min_bucket, "minimum instances per OneR interval");
    train_cmd->add_option("--confidence", train.confidence, "error-based pruning confidence factor");
    train_cmd->add_option("--rep-folds", train.rep_folds, "reduced-error pruning folds");
    train_cmd->add_option("--criterion", train.criterion, "gain | gain-ratio");
    train_cmd->add_option("--nb-mode", train.nb_mode, "gaussian | binned");
    train_cmd->add_option("--bins", train.bins, "bins for binned naive Bayes");
    train_cmd->add_option("--folds", train.folds, "cross-validation folds");
    train_cmd->add_flag("--dump-rules", train.dump_rules, "print the OneR rules");
    add_common(train_cmd, true, true);

    ClusterArgs cl;
    auto* cluster_cmd = app.add_subcommand("cluster", "k-means or SOM clustering");
    cluster_cmd->add_option("input", cl.input, "dataset CSV")->required();
    cluster_cmd->add_option("--algo", cl.algo, "kmeans | som");
    cluster_cmd->add_option("--k", cl.k, "cluster count");
    cluster_cmd->add_option("--grid", cl.grid, "SOM lattice WxH");
    cluster_cmd->add_option("--metric", cl.metric, "euclidean | manhattan");
    cluster_cmd->add_option("--max-iter", cl.max_iter, "k-means iteration cap");
    cluster_cmd->add_option("--epochs", cl.epochs, "SOM epochs");
    cluster_cmd->add_option("--rate", cl.rate, "SOM initial learning rate");
    cluster_cmd->add_option("--radius", cl.radius, "SOM initial radius (default max(W,H)/2)");
    cluster_cmd->add_flag("--standardize,!--no-standardize", cl.standardize, "z-score attributes first (default on)");
    cluster_cmd->add_flag("--classes-to-clusters", cl.classes_to_clusters, "evaluate clusters against classes");
    add_common(cluster_cmd, true, true);

    std::string report_input;
    auto* report_cmd = app.add_subcommand("report", "accuracy and heat map from a confusion CSV");
    report_cmd->add_option("confusion", report_input, "confusion CSV")->required();
    add_common(report_cmd, true, false);

    SynthArgs synth;
    auto* synth_cmd = app.add_subcommand("synth", "generate synthetic office layouts");
    synth_cmd->add_option("--target", synth.target, "open cell target of a single layout");
    synth_cmd->add_option("--layouts", synth.layouts, "comma-separated open cell targets");
    synth_cmd->add_option("--strength", synth.strength, "plant a mean-depth label signal of this strength");
    add_common(synth_cmd, true, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        if (!config_path.empty()) apply_config(*sub, RunConfig::load(config_path));
        if (auto* seed = sub->get_option_no_throw("--seed"); seed && seed->count() == 0) {
            throw UsageError(sub->get_name() + ": --seed is required");
        }
        if (sub == vga_cmd) return run_vga(common, vga);
        if (sub == ref_cmd) return run_reference(common, ref);
        if (sub == study_cmd) return run_study(common, study_inputs);
        if (sub == prep_cmd) return run_prep(common, prep);
        if (sub == pca_cmd) return run_pca(common, pca);
        if (sub == train_cmd) return run_train(common, train);
        if (sub == cluster_cmd) return run_cluster(common, cl);
        if (sub == report_cmd) return run_report(common, report_input);
        if (sub == synth_cmd) return run_synth(common, synth);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
