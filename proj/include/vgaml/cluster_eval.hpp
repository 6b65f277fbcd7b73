#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/usage_class.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vgaml {

/// Per-attribute z-score parameters. Attributes with zero spread keep
/// their scale (divisor 1).
struct Standardization {
    std::vector<double> means;
    std::vector<double> sds;
};

/// Throws SchemaError on nominal attributes or an empty dataset.
Standardization fit_standardization(const Dataset& ds);
Dataset apply_standardization(const Dataset& ds, const Standardization& s);

/// Plain numeric rows of a dataset with numeric attributes only.
std::vector<std::vector<double>> numeric_rows(const Dataset& ds);

struct ClassesToClusters {
    /// Majority class of each cluster; empty clusters get no class.
    std::vector<std::optional<UsageClass>> cluster_class;
    /// Instances per (cluster, class).
    std::vector<ClassCounts> cluster_counts;
    /// Rows actual class, columns the class assigned through the cluster.
    ConfusionCounts confusion{};
    std::size_t correct = 0;
    std::size_t total = 0;
    double accuracy() const { return total ? static_cast<double>(correct) / static_cast<double>(total) : 0.0; }
};

/// Each cluster takes its majority label (ties to the earlier class).
ClassesToClusters classes_to_clusters(std::span<const std::size_t> assignments, std::span<const UsageClass> labels,
                                      std::size_t cluster_count);

/// Cluster-by-class table: header "cluster,G1,...,EXCLUDE,assigned", one row
/// per cluster.
std::string render_cluster_table(const ClassesToClusters& result);

/// "instance,cluster,class" rows.
std::string render_assignments(std::span<const std::size_t> ids, std::span<const std::size_t> assignments,
                               std::span<const UsageClass> labels);

}  // namespace vgaml
