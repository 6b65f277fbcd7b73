#pragma once

#include "vgaml/usage_class.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vgaml {

/// Fold index for every instance. Members of each class are shuffled with
/// the seeded generator, then dealt round-robin; the dealing position carries
/// over from one class to the next so fold sizes stay within one of each other.
std::vector<std::size_t> assign_stratified_folds(std::span<const UsageClass> labels, std::size_t k,
                                                 std::uint64_t seed);

}  // namespace vgaml
