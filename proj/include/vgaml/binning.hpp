#pragma once

#include "vgaml/dataset.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace vgaml {

/// Equal-width intervals over one numeric attribute. Bins are left-closed and
/// right-open except the last, which is closed; values outside the fitted
/// range clamp to the first or last bin.
struct BinningFilter {
    std::string attribute;
    /// bin_count + 1 boundaries. A constant attribute has one bin whose two
    /// edges coincide.
    std::vector<double> edges;

    std::size_t bin_count() const { return edges.size() - 1; }
    std::size_t bin(double value) const;
    /// Nominal label of bin i, "b1" .. "bN".
    static std::string label(std::size_t i);
};

/// Throws SchemaError for a nominal attribute or an empty dataset.
BinningFilter equal_width_bins(const Dataset& ds, std::size_t attr, std::size_t n = 10);

/// Fits one filter per numeric attribute and replaces each by a nominal
/// attribute with all bin labels. Nominal attributes pass through unchanged.
std::vector<BinningFilter> fit_binning(const Dataset& ds, std::size_t n = 10);
Dataset apply_binning(const Dataset& ds, const std::vector<BinningFilter>& filters);

}  // namespace vgaml
