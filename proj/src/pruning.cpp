#include "vgaml/decision_tree.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/folds.hpp"

#include <boost/math/distributions/normal.hpp>

#include <cmath>

namespace vgaml {

DecisionTree rep_prune(const DecisionTree& input, const Dataset& validation) {
    DecisionTree tree = input;
    for (;;) {
        const std::size_t n = tree.size();
        std::vector<ClassCounts> reach(n, ClassCounts{});
        for (std::size_t i = 0; i < validation.size(); ++i) {
            const auto row = validation.row(i);
            const auto cls = class_index(validation.label(i));
            std::size_t at = 0;
            for (;;) {
                ++reach[at][cls];
                const auto& node = tree.nodes[at];
                if (node.leaf) break;
                const double v = row[node.attribute];
                at = node.numeric ? node.children[v <= node.threshold ? 0 : 1]
                                  : node.children[static_cast<std::size_t>(v)];
            }
        }
        std::vector<std::uint64_t> subtree(n, 0);
        std::vector<bool> collapse(n, false);
        bool changed = false;
        for (std::size_t at = n; at-- > 0;) {
            const auto& node = tree.nodes[at];
            std::uint64_t as_leaf = 0;
            for (auto c : reach[at]) as_leaf += c;
            as_leaf -= reach[at][class_index(node.cls)];
            if (node.leaf) {
                subtree[at] = as_leaf;
                continue;
            }
            std::uint64_t below = 0;
            for (auto c : node.children) below += subtree[c];
            if (as_leaf <= below) {
                collapse[at] = true;
                changed = true;
                subtree[at] = as_leaf;
            } else {
                subtree[at] = below;
            }
        }
        if (!changed) return tree;
        tree = collapse_nodes(tree, collapse);
    }
}

double pessimistic_rate(double errors, double n, double z) {
    if (n <= 0) return 0;
    const double f = errors / n;
    const double z2 = z * z;
    const double radicand = std::max(0.0, f / n - f * f / n + z2 / (4 * n * n));
    return (f + z2 / (2 * n) + z * std::sqrt(radicand)) / (1 + z2 / n);
}

double confidence_z(double confidence) {
    if (!(confidence > 0 && confidence < 1)) {
        throw NumericError("confidence factor must lie in (0, 1), got " + std::to_string(confidence));
    }
    return boost::math::quantile(boost::math::normal(), 1.0 - confidence);
}

namespace {

double leaf_pessimistic(const TreeNode& node, double z) {
    const auto n = static_cast<double>(node.total());
    return n * pessimistic_rate(static_cast<double>(node.errors()), n, z);
}

}  // namespace

DecisionTree ebp_prune(const DecisionTree& tree, double confidence) {
    const double z = confidence_z(confidence);
    const std::size_t n = tree.size();
    std::vector<double> subtree(n, 0);
    std::vector<bool> collapse(n, false);
    for (std::size_t at = n; at-- > 0;) {
        const auto& node = tree.nodes[at];
        const double as_leaf = leaf_pessimistic(node, z);
        if (node.leaf) {
            subtree[at] = as_leaf;
            continue;
        }
        double below = 0;
        for (auto c : node.children) below += subtree[c];
        if (as_leaf <= below) {
            collapse[at] = true;
            subtree[at] = as_leaf;
        } else {
            subtree[at] = below;
        }
    }
    return collapse_nodes(tree, collapse);
}

double pessimistic_errors(const DecisionTree& tree, double confidence) {
    const double z = confidence_z(confidence);
    double sum = 0;
    for (const auto& node : tree.nodes) {
        if (node.leaf) sum += leaf_pessimistic(node, z);
    }
    return sum;
}

DecisionTree train_tree(const Dataset& ds, const TreeOptions& options, const PruningOptions& pruning) {
    switch (pruning.kind) {
        case PruningKind::None: return grow_tree(ds, options);
        case PruningKind::ErrorBased: return ebp_prune(grow_tree(ds, options), pruning.confidence);
        case PruningKind::ReducedError: break;
    }
    if (ds.empty()) throw SchemaError("cannot train on an empty dataset");
    const auto folds = assign_stratified_folds(ds.labels(), pruning.rep_folds, pruning.seed);
    std::vector<std::size_t> grow_rows, prune_rows;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        (folds[i] + 1 == pruning.rep_folds ? prune_rows : grow_rows).push_back(i);
    }
    if (grow_rows.empty()) throw SchemaError("too few instances for reduced-error pruning");
    return rep_prune(grow_tree(ds.subset(grow_rows), options), ds.subset(prune_rows));
}

}  // namespace vgaml
