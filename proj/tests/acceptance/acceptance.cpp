// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"

#include "vgaml/cluster_eval.hpp"
#include "vgaml/csv.hpp"
#include "vgaml/dataset.hpp"
#include "vgaml/decision_tree.hpp"
#include "vgaml/errors.hpp"
#include "vgaml/evaluation.hpp"
#include "vgaml/integration.hpp"
#include "vgaml/kmeans.hpp"
#include "vgaml/label_map.hpp"
#include "vgaml/learner.hpp"
#include "vgaml/measures.hpp"
#include "vgaml/oner.hpp"
#include "vgaml/pca.hpp"
#include "vgaml/random.hpp"
#include "vgaml/reference_graph.hpp"
#include "vgaml/som.hpp"
#include "vgaml/study.hpp"
#include "vgaml/synthgen.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace vgaml;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

// Collects the first few failure messages of one criterion.
struct Check {
    std::size_t failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        ++failures;
        if (notes.size() < 5) notes.push_back(what);
    }
    bool ok() const { return failures == 0; }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// ---------------------------------------------------------------------------

Check vga_oracle() {
    Check c;
    Rng rng(20240101);
    std::size_t nodes = 0;
    const auto t0 = Clock::now();
    for (int t = 0; t < 200; ++t) {
        const auto grid = oracle::random_grid(rng, 20, 0.4);
        const auto got = compute_all_measures(grid);
        const auto want = oracle::measures(grid, kDefaultCornerRule);
        c.expect(got.size() == want.size(), "node count differs on grid " + std::to_string(t));
        if (got.size() != want.size()) continue;
        nodes += got.size();
        for (std::size_t i = 0; i < got.size(); ++i) {
            const auto& r = got[i].record;
            const auto& w = want[i];
            const std::string at = "grid " + std::to_string(t) + " node " + std::to_string(i);
            c.expect(r.node_count == w.node_count, at + ": node count");
            c.expect(r.connectivity == w.connectivity, at + ": connectivity");
            c.expect(oracle::close(r.visual_mean_depth, w.mean_depth, 1e-9), at + ": mean depth");
            c.expect(oracle::close(r.point_first_moment, w.first_moment, 1e-9), at + ": first moment");
            c.expect(oracle::close(r.point_second_moment, w.second_moment, 1e-9), at + ": second moment");
            c.expect(oracle::close(r.visual_entropy, w.entropy, 1e-9), at + ": entropy");
            c.expect(oracle::close(r.relativized_entropy, w.relativised, 1e-9), at + ": relativised entropy");
        }
    }
    const double s = seconds_since(t0);
    c.expect(s < 60.0, "took " + fmt("%.1f", s) + " s");
    c.notes.insert(c.notes.begin(), std::to_string(nodes) + " nodes, " + fmt("%.1f", s) + " s");
    return c;
}

// ---------------------------------------------------------------------------

double bfs_mean(const ReferenceGraph& g, std::size_t source) {
    const auto d = oracle::bfs_lists(g.adjacency, source);
    double sum = 0;
    for (int v : d) sum += v;
    return sum / static_cast<double>(g.size() - 1);
}

Check reference_graphs() {
    Check c;
    for (auto kind : kAllReferenceKinds) {
        const std::string name(reference_kind_name(kind));
        for (std::uint64_t k = 4; k <= 200; ++k) {
            const std::string at = name + " k=" + std::to_string(k);
            const auto g = build_reference_graph(kind, k);
            c.expect(g.size() == k, at + ": size");
            bool connected = true;
            double want = 0;
            if (kind == ReferenceGraphKind::BipartiteTekl) {
                for (std::size_t v = 0; v < g.size(); ++v) want += bfs_mean(g, v);
                want /= static_cast<double>(g.size());
            } else {
                want = bfs_mean(g, 0);
            }
            for (int d : oracle::bfs_lists(g.adjacency, 0)) connected = connected && d >= 0;
            c.expect(connected, at + ": disconnected");
            c.expect(oracle::close(reference_mean_depth(kind, k), want, 1e-12), at + ": mean depth");

            // 1/I at MD = 1 + t must be t / (MD_ref - 1).
            const double a = reciprocal_integration(1.5, k, kind);
            const double b = reciprocal_integration(3.5, k, kind);
            const double slope = (b - a) / 2.0;
            for (double md = 1.25; md <= 12.0; md += 0.25) {
                const double r = 1.0 / integration(md, k, kind).value;
                const double line = a + slope * (md - 1.5);
                c.expect(oracle::close(r, line, 1e-12), at + ": 1/I off the line at MD " + fmt("%g", md));
            }
        }
    }
    return c;
}

// ---------------------------------------------------------------------------

struct Layout {
    FloorPlanGrid grid;
    std::vector<NodeMeasures> measures;
};

std::vector<Layout> build_corpus(double& elapsed) {
    const auto t0 = Clock::now();
    std::vector<Layout> corpus;
    const auto& targets = default_corpus_targets();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        Layout l{generate_office(i + 1, targets[i]), {}};
        VgaOptions options;
        options.jobs = jobs();
        l.measures = compute_all_measures(l.grid, options);
        corpus.push_back(std::move(l));
    }
    elapsed = seconds_since(t0);
    return corpus;
}

Check variance_ordering(const std::vector<Layout>& corpus) {
    Check c;
    std::vector<PlanRecord> all;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto target = static_cast<double>(default_corpus_targets()[i]);
        const auto k = static_cast<double>(corpus[i].grid.open_count());
        c.expect(std::abs(k - target) <= 0.1 * target, "layout " + std::to_string(i + 1) + " has " + fmt("%.0f", k) + " nodes");
        const auto records = to_plan_records(corpus[i].grid, corpus[i].measures, "layout_" + std::to_string(i + 1));
        all.insert(all.end(), records.begin(), records.end());
    }
    const auto study = integration_study(all);
    const auto& s = study.summary.columns;
    const double p = s[1].variance, tekl = s[2].variance, hh = s[3].variance;
    c.notes.push_back("variance Tekl " + fmt("%.4g", tekl) + ", P-value " + fmt("%.4g", p) + ", HH " + fmt("%.4g", hh));
    c.expect(tekl < p && tekl < hh, "Tekl variance is not the smallest");
    c.expect(s[2].count > 0, "no rows in the summary");
    return c;
}

// ---------------------------------------------------------------------------

Dataset planted_dataset(const std::vector<Layout>& corpus, double strength, std::uint64_t seed) {
    std::vector<PlanRecord> all;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::vector<double> md;
        md.reserve(corpus[i].measures.size());
        for (const auto& m : corpus[i].measures) md.push_back(m.record.visual_mean_depth);
        const auto planted = plant_geometry_signal(corpus[i].grid, strength, seed + i, md);
        const auto records = to_plan_records(planted, corpus[i].measures, "layout_" + std::to_string(i + 1));
        all.insert(all.end(), records.begin(), records.end());
    }
    const auto full = select_attributes(dataset_from_records(all, LabelMap::builtin()), AttributePreset::Full10);
    return read_dataset_csv(write_dataset_csv(full));
}

Check learner_floors(const std::vector<Layout>& corpus, double corpus_seconds) {
    Check c;
    const auto t0 = Clock::now();
    LearnerConfig zeror, oner, tree;
    zeror.kind = LearnerKind::ZeroR;
    oner.kind = LearnerKind::OneR;
    tree.kind = LearnerKind::Tree;
    tree.tree.min_leaf = 50;
    tree.pruning.kind = PruningKind::ErrorBased;
    for (double strength : {0.8, 0.9, 1.0}) {
        const auto ds = planted_dataset(corpus, strength, 77);
        const std::string at = "strength " + fmt("%.1f", strength);
        const double z = accuracy_on(*make_learner(zeror)->train(ds), ds);
        const double o = accuracy_on(*make_learner(oner)->train(ds), ds);
        const double t = accuracy_on(*make_learner(tree)->train(ds), ds);
        c.expect(z <= o && o <= t, at + ": training accuracy order " + fmt("%.4f", z) + " / " + fmt("%.4f", o) + " / " +
                                       fmt("%.4f", t));
        const auto plan = stratified_folds(ds, 10, 1);
        const double zcv = cross_validate(*make_learner(zeror), ds, plan, jobs()).accuracy();
        const double tcv = cross_validate(*make_learner(tree), ds, plan, jobs()).accuracy();
        c.expect(tcv >= zcv + 0.20, at + ": tree CV " + format_accuracy(tcv) + " vs ZeroR " + format_accuracy(zcv));
        c.notes.push_back(at + " n=" + std::to_string(ds.size()) + ": ZeroR " + format_accuracy(zcv) + ", tree " +
                          format_accuracy(tcv));
    }
    const double s = seconds_since(t0) + corpus_seconds;
    c.expect(s < 300.0, "took " + fmt("%.1f", s) + " s");
    c.notes.push_back(fmt("%.1f", s) + " s including corpus generation");
    return c;
}

// ---------------------------------------------------------------------------

Dataset noisy_dataset(Rng& rng, std::size_t n, double noise) {
    Dataset ds({{"a", AttributeKind::Numeric, {}}, {"b", AttributeKind::Numeric, {}}, {"c", AttributeKind::Numeric, {}},
                {"d", AttributeKind::Nominal, {"u", "v", "w"}}});
    for (std::size_t i = 0; i < n; ++i) {
        const double x = rng.uniform() * 10, y = rng.uniform() * 10, z = rng.uniform();
        const double d = static_cast<double>(rng.index(3));
        UsageClass cls = x < 4 ? UsageClass::G1 : (y < 5 ? UsageClass::G2 : (d == 2 ? UsageClass::G4 : UsageClass::G3));
        if (rng.bernoulli(noise)) cls = class_from_index(rng.index(4));
        const double row[] = {x, y, z, d};
        ds.add_row(row, cls);
    }
    return ds;
}

std::size_t validation_errors(const DecisionTree& t, const Dataset& ds) {
    std::size_t e = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) e += tree_predict(t, ds.row(i)) != ds.label(i);
    return e;
}

// Binomial upper confidence limit, written out from its closed form.
double upper_limit(double e, double n, double z) {
    const double f = e / n;
    return (f + z * z / (2 * n) + z * std::sqrt(f / n - f * f / n + z * z / (4 * n * n))) / (1 + z * z / n);
}

TreeNode node(std::uint64_t g1, std::uint64_t g2) {
    TreeNode n;
    n.counts[0] = g1;
    n.counts[1] = g2;
    n.cls = g1 >= g2 ? UsageClass::G1 : UsageClass::G2;
    return n;
}

TreeNode inner(std::uint64_t g1, std::uint64_t g2, std::size_t attribute, bool numeric, double threshold,
               std::vector<std::size_t> kids) {
    TreeNode n = node(g1, g2);
    n.leaf = false;
    n.attribute = attribute;
    n.numeric = numeric;
    n.threshold = threshold;
    n.children = std::move(kids);
    return n;
}

Check pruning_contracts() {
    Check c;
    Rng rng(5150);
    std::size_t shrunk = 0;
    for (int t = 0; t < 100; ++t) {
        const auto train = noisy_dataset(rng, 200 + rng.index(400), 0.1 + 0.3 * rng.uniform());
        const auto val = noisy_dataset(rng, 50 + rng.index(200), 0.1 + 0.3 * rng.uniform());
        const auto tree = grow_tree(train, {1 + rng.index(8)});
        const auto rep = rep_prune(tree, val);
        const auto ebp = ebp_prune(tree);
        const std::string at = "fixture " + std::to_string(t);
        c.expect(validation_errors(rep, val) <= validation_errors(tree, val), at + ": REP raised validation error");
        c.expect(rep.size() <= tree.size(), at + ": REP grew the tree");
        c.expect(ebp.size() <= tree.size(), at + ": EBP grew the tree");
        shrunk += rep.size() < tree.size();
    }
    c.notes.push_back("REP shrank " + std::to_string(shrunk) + "/100 trees");

    // Root splits on a numeric attribute into X and Y; X splits three ways on
    // a nominal attribute, Y on a second threshold.
    DecisionTree w;
    w.schema = {{"a", AttributeKind::Numeric, {}}, {"b", AttributeKind::Nominal, {"u", "v", "w"}}};
    w.nodes = {inner(36, 38, 0, true, 5, {1, 5}), inner(5, 9, 1, false, 0, {2, 3, 4}), node(2, 4), node(1, 1), node(2, 4),
               inner(31, 29, 0, true, 8, {6, 7}), node(30, 0), node(1, 29)};
    const double z = 0.6744897501960817;
    const double x_leaves = 6 * upper_limit(2, 6, z) + 2 * upper_limit(1, 2, z) + 6 * upper_limit(2, 6, z);
    const double x_leaf = 14 * upper_limit(5, 14, z);
    const double y_leaves = 30 * upper_limit(0, 30, z) + 30 * upper_limit(1, 30, z);
    const double y_leaf = 60 * upper_limit(29, 60, z);
    const double root_leaf = 74 * upper_limit(36, 74, z);
    const bool collapse_x = x_leaf <= x_leaves;
    const bool collapse_y = y_leaf <= y_leaves;
    const double below_root = (collapse_x ? x_leaf : x_leaves) + (collapse_y ? y_leaf : y_leaves);
    const bool collapse_root = root_leaf <= below_root;
    c.expect(collapse_x && !collapse_y && !collapse_root, "worksheet decisions changed");
    const auto p = ebp_prune(w);
    c.expect(p.size() == 5, "worksheet tree pruned to " + std::to_string(p.size()) + " nodes");
    if (p.size() == 5) {
        c.expect(!p.nodes[0].leaf && p.nodes[1].leaf && !p.nodes[2].leaf, "worksheet tree shape");
        c.expect(p.nodes[1].cls == UsageClass::G2, "collapsed X predicts the wrong class");
    }
    c.expect(oracle::close(pessimistic_errors(p), x_leaf + y_leaves, 1e-12), "worksheet pessimistic error");
    c.notes.push_back("worksheet X " + fmt("%.4f", x_leaf) + " <= " + fmt("%.4f", x_leaves) + ", Y " + fmt("%.4f", y_leaf) +
                      " > " + fmt("%.4f", y_leaves));
    return c;
}

// ---------------------------------------------------------------------------

Check pca_checks() {
    Check c;
    Rng rng(6060);
    for (int t = 0; t < 50; ++t) {
        const std::size_t d = 10, n = 30 + rng.index(200);
        std::vector<Attribute> schema;
        for (std::size_t j = 0; j < d; ++j) schema.push_back({"a" + std::to_string(j), AttributeKind::Numeric, {}});
        Dataset ds(schema);
        std::vector<std::vector<double>> mix(d, std::vector<double>(d));
        for (auto& r : mix)
            for (auto& v : r) v = rng.uniform() * 2 - 1;
        oracle::Matrix rows;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> latent(d), row(d, 0.0);
            for (std::size_t j = 0; j < d; ++j) latent[j] = (rng.uniform() - 0.5) * static_cast<double>(j + 1);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l) row[j] += mix[j][l] * latent[l];
            ds.add_row(row, UsageClass::G1);
            rows.push_back(row);
        }
        const auto ref = oracle::jacobi(oracle::covariance(rows));
        double total = 0;
        for (double v : ref.values) total += v;
        const std::string at = "dataset " + std::to_string(t);

        const auto full = pca_fit(ds, {0.95, d});
        c.expect(full.retained() == d, at + ": component count");
        for (std::size_t a = 0; a < full.retained(); ++a) {
            for (std::size_t b = a; b < full.retained(); ++b) {
                double dot = 0;
                for (std::size_t j = 0; j < d; ++j) dot += full.components[a][j] * full.components[b][j];
                c.expect(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-9, at + ": not orthonormal");
            }
            double dot = 0, err = 0;
            for (std::size_t j = 0; j < d; ++j) dot += full.components[a][j] * ref.vectors[a][j];
            const double sign = dot < 0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < d; ++j) err = std::max(err, std::abs(full.components[a][j] - sign * ref.vectors[a][j]));
            c.expect(err <= 1e-6, at + ": loading " + std::to_string(a) + " differs by " + fmt("%.2e", err));
            c.expect(oracle::close(full.eigenvalues[a], ref.values[a], 1e-9), at + ": eigenvalue " + std::to_string(a));
        }

        const double target = 0.5 + 0.49 * rng.uniform();
        const auto model = pca_fit(ds, {target, 0});
        std::size_t m = 0;
        double acc = 0;
        while (m < d && acc / total < target) acc += ref.values[m++];
        c.expect(model.retained() == m, at + ": kept " + std::to_string(model.retained()) + " of " + std::to_string(m));
        c.expect(std::abs(model.retained_share() - acc / total) <= 1e-6 * (acc / total), at + ": retained share");
        double shares = 0;
        for (double s : model.variance_share) shares += s;
        c.expect(std::abs(shares - 1.0) <= 1e-6, at + ": shares do not sum to 1");
    }
    return c;
}

// ---------------------------------------------------------------------------

struct Labelled {
    std::vector<std::vector<double>> rows;
    std::vector<UsageClass> labels;
};

Labelled cluster_fixture(Rng& rng, std::size_t centres, std::size_t per, std::size_t d, double spread) {
    Labelled f;
    for (std::size_t c = 0; c < centres; ++c) {
        for (std::size_t i = 0; i < per + rng.index(per); ++i) {
            std::vector<double> r(d);
            for (std::size_t j = 0; j < d; ++j) r[j] = 4.0 * static_cast<double>((c * (j + 1)) % centres) + spread * rng.uniform();
            f.rows.push_back(r);
            f.labels.push_back(rng.bernoulli(0.15) ? class_from_index(rng.index(centres)) : class_from_index(c));
        }
    }
    return f;
}

double majority_share(std::span<const UsageClass> labels) {
    ClassCounts counts{};
    for (auto c : labels) ++counts[class_index(c)];
    return static_cast<double>(counts[majority_index(counts)]) / static_cast<double>(labels.size());
}

Check clustering_checks() {
    Check c;
    Rng rng(7070);
    for (int t = 0; t < 12; ++t) {
        const auto f = cluster_fixture(rng, 2 + rng.index(4), 20, 2 + rng.index(4), 1.0 + 6.0 * rng.uniform());
        const double majority = majority_share(f.labels);
        const std::string at = "fixture " + std::to_string(t);
        for (auto metric : {Metric::Euclidean, Metric::Manhattan}) {
            const KMeansOptions o{2 + rng.index(5), metric, 100 + static_cast<std::uint64_t>(t)};
            try {
                const auto m = kmeans_fit(f.rows, o);
                for (std::size_t i = 1; i < m.objective_history.size(); ++i)
                    c.expect(m.objective_history[i] <= m.objective_history[i - 1], at + ": objective rose");
                const auto again = kmeans_fit(f.rows, o);
                c.expect(again.centroids == m.centroids && again.assignments == m.assignments &&
                             again.objective_history == m.objective_history,
                         at + ": k-means not reproducible");
                c.expect(classes_to_clusters(m.assignments, f.labels, o.k).accuracy() >= majority,
                         at + ": k-means classes-to-clusters below majority");
            } catch (const NumericError& e) {
                c.expect(false, at + ": " + e.what());
            }
        }
        SomOptions so;
        so.width = 2 + rng.index(4);
        so.height = 1 + rng.index(3);
        so.epochs = 5 + rng.index(20);
        so.seed = 200 + static_cast<std::uint64_t>(t);
        const auto init = som_init(f.rows, so);
        const auto fit = som_fit(f.rows, so);
        c.expect(quantization_error(fit, f.rows) <= quantization_error(init, f.rows), at + ": SOM error rose");
        c.expect(som_fit(f.rows, so).weights == fit.weights, at + ": SOM not reproducible");
        std::vector<std::size_t> units;
        for (const auto& r : f.rows) units.push_back(som_map(fit, r));
        c.expect(classes_to_clusters(units, f.labels, fit.units()).accuracy() >= majority,
                 at + ": SOM classes-to-clusters below majority");
    }
    return c;
}

// ---------------------------------------------------------------------------

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

Check format_checks() {
    Check c;
    Rng rng(8080);
    const std::regex lt(R"(< -?[0-9][0-9.e+-]* -> G[0-9]+:[A-Za-z_/]+)");
    const std::regex ge(R"(>= (-?[0-9][0-9.e+-]*|-inf) -> G[0-9]+:[A-Za-z_/]+)");
    const std::regex nominal(R"(\S+ -> G[0-9]+:[A-Za-z_/]+)");
    const std::regex trailer(R"(\(([0-9]+)/([0-9]+) instances correct\))");
    for (int t = 0; t < 10; ++t) {
        const auto ds = noisy_dataset(rng, 300 + rng.index(300), 0.2);
        const auto m = train_oner(ds);
        const auto lines = lines_of(render_oner(m));
        const std::string at = "dump " + std::to_string(t);
        if (lines.size() < 3) {
            c.expect(false, at + ": too short");
            continue;
        }
        c.expect(lines[0] == m.attribute_name + ":", at + ": header line");
        for (std::size_t i = 1; i + 1 < lines.size(); ++i) {
            const bool last_rule = i + 2 == lines.size();
            const bool ok = m.numeric ? std::regex_match(lines[i], last_rule ? ge : lt) : std::regex_match(lines[i], nominal);
            c.expect(ok, at + ": rule line '" + lines[i] + "'");
        }
        std::smatch mt;
        const bool tr = std::regex_match(lines.back(), mt, trailer);
        c.expect(tr, at + ": trailer '" + lines.back() + "'");
        if (tr) {
            std::size_t correct = 0;
            for (std::size_t i = 0; i < ds.size(); ++i) correct += oner_predict(m, ds.row(i)) == ds.label(i);
            c.expect(std::stoul(mt[1]) == correct && std::stoul(mt[2]) == ds.size(), at + ": trailer counts");
        }
    }

    ConfusionCounts matrix{};
    for (int i = 0; i < 400; ++i) ++matrix[rng.index(12)][rng.index(12)];
    const auto rows = csv::parse(render_confusion_csv(matrix));
    c.expect(rows.size() == 13, "confusion CSV has " + std::to_string(rows.size()) + " rows");
    for (std::size_t r = 0; r < rows.size(); ++r) c.expect(rows[r].size() == 13, "confusion CSV row width");
    if (rows.size() == 13 && rows[0].size() == 13) {
        c.expect(rows[0][0].empty(), "confusion corner cell");
        for (std::size_t k = 0; k < 12; ++k) {
            const std::string code(class_code(kAllClasses[k]));
            c.expect(rows[0][k + 1] == code && rows[k + 1][0] == code, "confusion header " + code);
            for (std::size_t j = 0; j < 12; ++j)
                c.expect(rows[k + 1][j + 1] == std::to_string(matrix[k][j]), "confusion cell " + code);
        }
        c.expect(rows[0][12] == "EXCLUDE", "last class column");
    }
    c.expect(parse_confusion_csv(render_confusion_csv(matrix)) == matrix, "confusion round-trip");

    const std::regex four(R"([0-9]{1,3}\.[0-9]{4} %)");
    for (double v : {0.0, 0.3692, 0.794654, 1.0, 1.0 / 3.0, 0.99999}) {
        const auto s = format_accuracy(v);
        c.expect(std::regex_match(s, four), "accuracy text '" + s + "'");
    }
    c.expect(format_accuracy(0.794654) == "79.4654 %", "accuracy rounding");
    return c;
}

// ---------------------------------------------------------------------------

bool report(int id, const std::string& name, const std::function<Check()>& body) {
    Check c;
    try {
        c = body();
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << id << ": " << name;
    if (!c.ok()) std::cout << " (" << c.failures << " failed checks)";
    std::cout << "\n";
    for (const auto& n : c.notes) std::cout << "    " << n << "\n";
    std::cout.flush();
    return c.ok();
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "VGA measures match the brute-force oracle", vga_oracle);
    all &= report(2, "reference graphs and reciprocal integration", reference_graphs);

    double corpus_seconds = 0;
    std::vector<Layout> corpus;
    std::string corpus_error;
    try {
        corpus = build_corpus(corpus_seconds);
    } catch (const std::exception& e) {
        corpus_error = e.what();
    }
    const auto need_corpus = [&](const std::function<Check()>& body) {
        return [&, body]() -> Check {
            if (!corpus_error.empty()) throw std::runtime_error("corpus: " + corpus_error);
            return body();
        };
    };
    all &= report(3, "Tekl integration has the smallest variance",
                  need_corpus([&] { return variance_ordering(corpus); }));
    all &= report(4, "learner floors on planted-signal corpora",
                  need_corpus([&] { return learner_floors(corpus, corpus_seconds); }));
    all &= report(5, "pruning contracts", pruning_contracts);
    all &= report(6, "PCA against an independent eigen-solver", pca_checks);
    all &= report(7, "clustering contracts", clustering_checks);
    all &= report(8, "output formats", format_checks);
    return all ? 0 : 1;
}
