#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vgaml {

struct SomOptions {
    std::size_t width = 4;
    std::size_t height = 3;
    std::size_t epochs = 10;
    double rate0 = 0.5;
    /// Negative selects max(width, height) / 2.
    double radius0 = -1;
    std::uint64_t seed = 1;
};

/// Rectangular lattice of weight vectors, unit (x, y) at index y * width + x.
struct SomLattice {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::vector<double>> weights;

    std::size_t units() const { return weights.size(); }
};

/// Learning rate and neighbourhood radius during `epoch` (0-based): both
/// decay linearly, by a factor (1 - epoch / epochs).
double som_rate(const SomOptions& options, std::size_t epoch);
double som_radius(const SomOptions& options, std::size_t epoch);

/// Lattice whose weights are seeded random training instances.
SomLattice som_init(const std::vector<std::vector<double>>& rows, const SomOptions& options);

/// One update: every unit within `radius` lattice distance of the
/// best-matching unit moves toward x by rate * exp(-d^2 / (2 radius^2)).
/// Radius 0 moves the best-matching unit alone, with impact 1.
void som_update(SomLattice& lattice, std::span<const double> x, double rate, double radius);

/// Online training: each epoch presents every instance once, in a seeded
/// shuffled order. Throws SchemaError for zero epochs or lattice dimensions.
SomLattice som_fit(const std::vector<std::vector<double>>& rows, const SomOptions& options);

/// Best-matching unit by Euclidean distance; ties to the lowest row-major index.
std::size_t som_map(const SomLattice& lattice, std::span<const double> instance);

/// Mean Euclidean distance from each instance to its best-matching unit.
double quantization_error(const SomLattice& lattice, const std::vector<std::vector<double>>& rows);

}  // namespace vgaml
