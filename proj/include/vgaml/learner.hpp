#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/decision_tree.hpp"
#include "vgaml/naive_bayes.hpp"
#include "vgaml/oner.hpp"
#include "vgaml/zeror.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace vgaml {

enum class LearnerKind { ZeroR, OneR, NaiveBayes, Tree };

LearnerKind parse_learner_kind(std::string_view text);
std::string_view learner_kind_name(LearnerKind kind);
PruningKind parse_pruning(std::string_view text);
std::string_view pruning_name(PruningKind kind);
NaiveBayesMode parse_nb_mode(std::string_view text);
SplitCriterion parse_criterion(std::string_view text);

struct LearnerConfig {
    LearnerKind kind = LearnerKind::Tree;
    std::size_t min_bucket = kDefaultMinBucket;
    NaiveBayesMode nb_mode = NaiveBayesMode::Gaussian;
    std::size_t nb_bins = 10;
    TreeOptions tree;
    PruningOptions pruning;
};

/// Metadata reported next to accuracies.
struct ModelInfo {
    std::string learner;
    std::string detail;
    std::optional<std::size_t> tree_size;
    std::optional<std::size_t> tree_leaves;
};

class Model {
public:
    virtual ~Model() = default;
    virtual UsageClass predict(std::span<const double> instance) const = 0;
    virtual ModelInfo info() const = 0;
    /// Human-readable model (rule list, tree, tables).
    virtual std::string render() const = 0;
    virtual std::string to_json() const = 0;
};

class Learner {
public:
    virtual ~Learner() = default;
    virtual std::unique_ptr<Model> train(const Dataset& ds) const = 0;
};

std::unique_ptr<Learner> make_learner(const LearnerConfig& config);

/// Fraction of `ds` the model labels correctly.
double accuracy_on(const Model& model, const Dataset& ds);

}  // namespace vgaml
