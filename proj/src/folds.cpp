#include "vgaml/folds.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/random.hpp"

#include <string>

namespace vgaml {

std::vector<std::size_t> assign_stratified_folds(std::span<const UsageClass> labels, std::size_t k,
                                                 std::uint64_t seed) {
    if (k < 2) throw SchemaError("fold count must be at least 2, got " + std::to_string(k));
    std::vector<std::vector<std::size_t>> members(kNumClasses);
    for (std::size_t i = 0; i < labels.size(); ++i) members[class_index(labels[i])].push_back(i);
    Rng rng(seed);
    std::vector<std::size_t> fold(labels.size(), 0);
    std::size_t next = 0;
    for (auto& m : members) {
        rng.shuffle(std::span<std::size_t>(m));
        for (auto i : m) {
            fold[i] = next;
            next = (next + 1) % k;
        }
    }
    return fold;
}

}  // namespace vgaml
