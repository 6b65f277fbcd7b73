#pragma once

#include "vgaml/reference_graph.hpp"

#include <cfloat>
#include <cstdint>

namespace vgaml {

/// Value reported when a node's mean depth is exactly 1 and the ratio is unbounded.
inline constexpr double kIntegrationSentinel = DBL_MAX;

/// 2(MD - 1)/(k - 2). Requires k >= 3.
double relative_asymmetry(double mean_depth, std::uint64_t k);

struct IntegrationValue {
    double value = 0;
    bool saturated = false;
};

/// Relative asymmetry of the reference graph over that of the node:
/// (MD_ref(k) - 1)/(MD - 1). Throws NumericError for k < 3 or MD < 1.
IntegrationValue integration(double mean_depth, std::uint64_t k, ReferenceGraphKind kind);

/// Reciprocal integration (MD - 1)/(MD_ref(k) - 1); finite for every MD >= 1.
double reciprocal_integration(double mean_depth, std::uint64_t k, ReferenceGraphKind kind);

}  // namespace vgaml
