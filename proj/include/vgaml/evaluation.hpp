#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/learner.hpp"
#include "vgaml/usage_class.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vgaml {

struct FoldPlan {
    std::size_t k = 10;
    std::uint64_t seed = 1;
    /// Fold of every instance, by row position.
    std::vector<std::size_t> fold;

    std::vector<std::size_t> test_rows(std::size_t f) const;
    std::vector<std::size_t> train_rows(std::size_t f) const;
};

FoldPlan stratified_folds(const Dataset& ds, std::size_t k = 10, std::uint64_t seed = 1);

ConfusionCounts confusion_matrix(std::span<const std::pair<UsageClass, UsageClass>> actual_predicted);

std::uint64_t matrix_total(const ConfusionCounts& m);
std::uint64_t matrix_trace(const ConfusionCounts& m);

struct EvalReport {
    ModelInfo model;
    std::size_t folds = 0;
    std::uint64_t seed = 0;
    std::vector<double> fold_accuracy;
    /// Pooled over all folds.
    ConfusionCounts matrix{};

    double accuracy() const;
};

/// For each fold, trains on the other folds and predicts the held-out one;
/// the confusion matrix pools every fold. Model metadata comes from a model
/// trained on the whole dataset. A training failure is rethrown with the
/// fold number prefixed.
EvalReport cross_validate(const Learner& learner, const Dataset& ds, const FoldPlan& plan, unsigned jobs = 1);

/// Percentage with four decimals, e.g. "79.4654 %".
std::string format_accuracy(double fraction);

/// "field,value" rows: learner, detail, folds, seed, instances, correct,
/// accuracy, tree size/leaves when known, per-fold accuracies.
std::string render_summary_csv(const EvalReport& report);

/// 12 x 12 counts, header ",G1,...,EXCLUDE", one row per actual class.
std::string render_confusion_csv(const ConfusionCounts& matrix);

/// Inverse of render_confusion_csv. Throws SchemaError when the class
/// header or row labels are not the canonical twelve.
ConfusionCounts parse_confusion_csv(std::string_view text);

/// Confusion rows divided by their sums; empty rows are all zero.
std::string render_heatmap_csv(const ConfusionCounts& matrix);

/// Writes summary.csv, confusion.csv and heatmap.csv into `dir`.
void export_report(const EvalReport& report, const std::string& dir);

}  // namespace vgaml
