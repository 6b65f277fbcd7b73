#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/usage_class.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vgaml {

inline constexpr std::size_t kDefaultMinLeaf = 50;

struct TreeNode {
    bool leaf = true;
    std::size_t attribute = 0;
    bool numeric = true;
    /// Numeric split: child 0 takes values <= threshold, child 1 the rest.
    double threshold = 0;
    /// Nominal split: one child per attribute value.
    std::vector<std::size_t> children;
    /// Training instances reaching this node, per class.
    ClassCounts counts{};
    /// Majority of `counts`, ties to the earlier class.
    UsageClass cls = UsageClass::G1;

    std::uint64_t total() const;
    std::uint64_t errors() const;
};

/// Nodes in a flat vector; node 0 is the root and every child index is
/// larger than its parent's.
struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::vector<Attribute> schema;
    bool gain_ratio = false;

    std::size_t size() const { return nodes.size(); }
    std::size_t leaves() const;
    /// Index of the leaf an instance falls into.
    std::size_t leaf_of(std::span<const double> instance) const;
};

enum class SplitCriterion { InfoGain, GainRatio };

struct TreeOptions {
    std::size_t min_leaf = kDefaultMinLeaf;
    SplitCriterion criterion = SplitCriterion::InfoGain;
};

/// Entropy in bits of a class distribution.
double entropy_bits(const ClassCounts& counts);

/// Parent entropy minus the size-weighted entropy of the parts.
double information_gain(const ClassCounts& parent, std::span<const ClassCounts> parts);

/// Top-down induction. A node splits on the attribute with the largest
/// positive criterion value whose every branch keeps at least min_leaf
/// instances; numeric thresholds are midpoints between adjacent distinct
/// values where the class changes. Ties go to the earlier attribute, then
/// the lower threshold. Throws SchemaError on an empty dataset or
/// min_leaf < 1.
DecisionTree grow_tree(const Dataset& ds, const TreeOptions& options = {});

UsageClass tree_predict(const DecisionTree& tree, std::span<const double> instance);

/// Copy with the subtrees under `collapse` nodes removed and the nodes
/// turned into leaves, renumbered in preorder.
DecisionTree collapse_nodes(const DecisionTree& tree, const std::vector<bool>& collapse);

/// Reduced-error pruning: working bottom-up, a subtree becomes a leaf when
/// its validation errors as a leaf do not exceed those of its branches.
/// Repeats until nothing changes.
DecisionTree rep_prune(const DecisionTree& tree, const Dataset& validation);

/// Upper confidence limit of an error rate f = errors/n at z.
double pessimistic_rate(double errors, double n, double z);

/// z for a confidence factor: the standard normal quantile at 1 - cf.
double confidence_z(double confidence);

/// Error-based pruning: a subtree becomes a leaf when the pessimistic error
/// count of the leaf does not exceed the summed pessimistic errors of the
/// subtree's leaves.
DecisionTree ebp_prune(const DecisionTree& tree, double confidence = 0.25);

/// Summed pessimistic error count over the leaves of the tree.
double pessimistic_errors(const DecisionTree& tree, double confidence = 0.25);

enum class PruningKind { None, ReducedError, ErrorBased };

struct PruningOptions {
    PruningKind kind = PruningKind::None;
    /// Reduced-error pruning holds out one of this many stratified folds.
    std::size_t rep_folds = 3;
    std::uint64_t seed = 1;
    double confidence = 0.25;
};

/// Grows a tree and applies the selected pruning. Reduced-error pruning
/// grows on all folds but one and validates on the held-out fold.
DecisionTree train_tree(const Dataset& ds, const TreeOptions& options = {}, const PruningOptions& pruning = {});

/// Indented text rendering with leaf counts and the tree size.
std::string render_tree(const DecisionTree& tree);

std::string tree_to_json(const DecisionTree& tree);
DecisionTree tree_from_json(const std::string& text);

}  // namespace vgaml
