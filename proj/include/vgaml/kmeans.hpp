#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace vgaml {

enum class Metric { Euclidean, Manhattan };

Metric parse_metric(std::string_view text);
double distance(Metric metric, std::span<const double> a, std::span<const double> b);

struct KMeansOptions {
    std::size_t k = 2;
    Metric metric = Metric::Euclidean;
    std::uint64_t seed = 1;
    std::size_t max_iter = 100;
};

struct KMeansModel {
    std::vector<std::vector<double>> centroids;
    Metric metric = Metric::Euclidean;
    std::size_t iterations = 0;
    bool converged = false;
    /// Within-cluster objective after every iteration: squared distances for
    /// Euclidean, distances for Manhattan.
    std::vector<double> objective_history;
    /// Cluster of each training instance.
    std::vector<std::size_t> assignments;

    double objective() const { return objective_history.empty() ? 0.0 : objective_history.back(); }
};

/// Lloyd iterations from k distinct random instances. Centroids are cluster
/// means (Euclidean) or coordinate-wise medians (Manhattan). An emptied
/// cluster is re-seeded with the instance farthest from its centroid.
/// Throws NumericError if the objective ever increases.
KMeansModel kmeans_fit(const std::vector<std::vector<double>>& rows, const KMeansOptions& options);

/// Nearest centroid; ties to the lower index.
std::size_t kmeans_assign(const KMeansModel& model, std::span<const double> instance);

/// Objective of the given assignment against the given centroids.
double kmeans_objective(Metric metric, const std::vector<std::vector<double>>& rows,
                        const std::vector<std::vector<double>>& centroids, std::span<const std::size_t> assignments);

}  // namespace vgaml
