#include "vgaml/evaluation.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"
#include "vgaml/folds.hpp"
#include "vgaml/parallel.hpp"

#include <cstdio>
#include <filesystem>

namespace vgaml {

std::vector<std::size_t> FoldPlan::test_rows(std::size_t f) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold.size(); ++i) {
        if (fold[i] == f) rows.push_back(i);
    }
    return rows;
}

std::vector<std::size_t> FoldPlan::train_rows(std::size_t f) const {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < fold.size(); ++i) {
        if (fold[i] != f) rows.push_back(i);
    }
    return rows;
}

FoldPlan stratified_folds(const Dataset& ds, std::size_t k, std::uint64_t seed) {
    return {k, seed, assign_stratified_folds(ds.labels(), k, seed)};
}

ConfusionCounts confusion_matrix(std::span<const std::pair<UsageClass, UsageClass>> pairs) {
    ConfusionCounts m{};
    for (const auto& [actual, predicted] : pairs) ++m[class_index(actual)][class_index(predicted)];
    return m;
}

std::uint64_t matrix_total(const ConfusionCounts& m) {
    std::uint64_t t = 0;
    for (const auto& row : m) {
        for (auto v : row) t += v;
    }
    return t;
}

std::uint64_t matrix_trace(const ConfusionCounts& m) {
    std::uint64_t t = 0;
    for (std::size_t c = 0; c < kNumClasses; ++c) t += m[c][c];
    return t;
}

double EvalReport::accuracy() const {
    const auto total = matrix_total(matrix);
    return total ? static_cast<double>(matrix_trace(matrix)) / static_cast<double>(total) : 0.0;
}

EvalReport cross_validate(const Learner& learner, const Dataset& ds, const FoldPlan& plan, unsigned jobs) {
    if (plan.fold.size() != ds.size()) throw SchemaError("fold plan does not match the dataset");
    EvalReport report;
    report.folds = plan.k;
    report.seed = plan.seed;
    std::vector<ConfusionCounts> per_fold(plan.k, ConfusionCounts{});
    parallel_for(plan.k, jobs, [&](std::size_t f) {
        const auto test = plan.test_rows(f);
        if (test.empty()) return;
        std::unique_ptr<Model> model;
        try {
            model = learner.train(ds.subset(plan.train_rows(f)));
        } catch (const Error& e) {
            throw Error(e.kind(), "fold " + std::to_string(f + 1) + ": " + e.what());
        }
        for (auto i : test) ++per_fold[f][class_index(ds.label(i))][class_index(model->predict(ds.row(i)))];
    });
    for (std::size_t f = 0; f < plan.k; ++f) {
        const auto total = matrix_total(per_fold[f]);
        report.fold_accuracy.push_back(total ? static_cast<double>(matrix_trace(per_fold[f])) / static_cast<double>(total)
                                             : 0.0);
        for (std::size_t a = 0; a < kNumClasses; ++a) {
            for (std::size_t p = 0; p < kNumClasses; ++p) report.matrix[a][p] += per_fold[f][a][p];
        }
    }
    report.model = learner.train(ds)->info();
    return report;
}

std::string format_accuracy(double fraction) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f %%", fraction * 100.0);
    return buf;
}

std::string render_summary_csv(const EvalReport& r) {
    std::string out = "field,value\n";
    auto add = [&](const std::string& k, const std::string& v) { out += k + "," + csv::escape(v) + "\n"; };
    add("learner", r.model.learner);
    add("detail", r.model.detail);
    add("folds", std::to_string(r.folds));
    add("seed", std::to_string(r.seed));
    add("instances", std::to_string(matrix_total(r.matrix)));
    add("correct", std::to_string(matrix_trace(r.matrix)));
    add("accuracy", format_accuracy(r.accuracy()));
    if (r.model.tree_size) add("tree_size", std::to_string(*r.model.tree_size));
    if (r.model.tree_leaves) add("tree_leaves", std::to_string(*r.model.tree_leaves));
    for (std::size_t f = 0; f < r.fold_accuracy.size(); ++f) {
        add("fold_" + std::to_string(f + 1), format_accuracy(r.fold_accuracy[f]));
    }
    return out;
}

namespace {

std::string matrix_header() {
    std::string out;
    for (auto c : kAllClasses) out += "," + std::string(class_code(c));
    return out + "\n";
}

}  // namespace

std::string render_confusion_csv(const ConfusionCounts& m) {
    std::string out = matrix_header();
    for (auto c : kAllClasses) {
        out += class_code(c);
        for (auto v : m[class_index(c)]) out += "," + std::to_string(v);
        out += "\n";
    }
    return out;
}

ConfusionCounts parse_confusion_csv(std::string_view text) {
    const auto rows = csv::parse(text);
    if (rows.size() != kNumClasses + 1) {
        throw SchemaError("confusion matrix needs a header and " + std::to_string(kNumClasses) + " rows");
    }
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        if (rows[0].size() != kNumClasses + 1 || rows[0][c + 1] != class_code(class_from_index(c))) {
            throw SchemaError("confusion matrix header must list the classes in canonical order");
        }
    }
    ConfusionCounts m{};
    for (std::size_t r = 0; r < kNumClasses; ++r) {
        const auto& row = rows[r + 1];
        if (row.size() != kNumClasses + 1 || row[0] != class_code(class_from_index(r))) {
            throw SchemaError("confusion matrix row " + std::to_string(r + 1) + " is not class " +
                              std::string(class_code(class_from_index(r))));
        }
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            double v;
            if (!csv::parse_double(row[c + 1], v) || v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v))) {
                throw SchemaError("confusion matrix cell '" + row[c + 1] + "' is not a count");
            }
            m[r][c] = static_cast<std::uint64_t>(v);
        }
    }
    return m;
}

std::string render_heatmap_csv(const ConfusionCounts& m) {
    std::string out = matrix_header();
    for (auto c : kAllClasses) {
        const auto& row = m[class_index(c)];
        std::uint64_t sum = 0;
        for (auto v : row) sum += v;
        out += class_code(c);
        for (auto v : row) {
            out += "," + csv::format_sig(sum ? static_cast<double>(v) / static_cast<double>(sum) : 0.0, 6);
        }
        out += "\n";
    }
    return out;
}

void export_report(const EvalReport& report, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const std::filesystem::path d(dir);
    csv::write_file((d / "summary.csv").string(), render_summary_csv(report));
    csv::write_file((d / "confusion.csv").string(), render_confusion_csv(report.matrix));
    csv::write_file((d / "heatmap.csv").string(), render_heatmap_csv(report.matrix));
}

}  // namespace vgaml
