#pragma once

#include "vgaml/dataset.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace vgaml {

struct PcaStop {
    /// Keep the fewest leading components whose variance share reaches this.
    double variance_target = 0.95;
    /// When nonzero, keep exactly this many components instead.
    std::size_t component_count = 0;
};

struct PcaModel {
    std::vector<std::string> attributes;
    std::vector<double> means;
    /// Per-attribute divisor applied after centring (1 unless standardized).
    std::vector<double> scales;
    bool standardized = false;
    /// Retained unit-length components, largest variance first.
    std::vector<std::vector<double>> components;
    /// Variance along every component (all eigenvalues, descending).
    std::vector<double> eigenvalues;
    /// eigenvalues / their sum.
    std::vector<double> variance_share;

    std::size_t retained() const { return components.size(); }
    double retained_share() const;
};

/// Eigen-decomposition of the sample covariance (n - 1) of the numeric
/// attributes. Each component is signed so its largest-magnitude loading is
/// nonnegative. Throws SchemaError on nominal attributes or fewer than 2 rows,
/// NumericError when the data has no variance.
PcaModel pca_fit(const Dataset& ds, const PcaStop& stop = {}, bool standardize = false);

/// Coordinates of one instance on the retained components.
std::vector<double> pca_transform(const PcaModel& model, std::span<const double> instance);

/// Replaces the attributes by "PC1".."PCm"; classes and ids are kept.
Dataset pca_transform(const PcaModel& model, const Dataset& ds);

std::string pca_to_json(const PcaModel& model);
PcaModel pca_from_json(const std::string& text);

}  // namespace vgaml
