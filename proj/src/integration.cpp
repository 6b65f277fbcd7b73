#include "vgaml/integration.hpp"

#include "vgaml/errors.hpp"

#include <string>

namespace vgaml {

namespace {

void check(double mean_depth, std::uint64_t k) {
    if (k < 3) throw NumericError("integration needs at least 3 nodes, got " + std::to_string(k));
    if (!(mean_depth >= 1.0)) throw NumericError("mean depth below 1: " + std::to_string(mean_depth));
}

}  // namespace

double relative_asymmetry(double mean_depth, std::uint64_t k) {
    check(mean_depth, k);
    return 2.0 * (mean_depth - 1.0) / static_cast<double>(k - 2);
}

IntegrationValue integration(double mean_depth, std::uint64_t k, ReferenceGraphKind kind) {
    check(mean_depth, k);
    if (mean_depth == 1.0) return {kIntegrationSentinel, true};
    return {(reference_mean_depth(kind, k) - 1.0) / (mean_depth - 1.0), false};
}

double reciprocal_integration(double mean_depth, std::uint64_t k, ReferenceGraphKind kind) {
    check(mean_depth, k);
    return (mean_depth - 1.0) / (reference_mean_depth(kind, k) - 1.0);
}

}  // namespace vgaml
