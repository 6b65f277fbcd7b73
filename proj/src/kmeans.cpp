#include "vgaml/kmeans.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/random.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vgaml {

Metric parse_metric(std::string_view text) {
    if (text == "euclidean") return Metric::Euclidean;
    if (text == "manhattan") return Metric::Manhattan;
    throw SchemaError("unknown metric '" + std::string(text) + "'");
}

double distance(Metric metric, std::span<const double> a, std::span<const double> b) {
    double s = 0;
    if (metric == Metric::Euclidean) {
        for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
        return std::sqrt(s);
    }
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

namespace {

double cost(Metric metric, std::span<const double> a, std::span<const double> b) {
    const double d = distance(metric, a, b);
    return metric == Metric::Euclidean ? d * d : d;
}

std::size_t nearest(Metric metric, const std::vector<std::vector<double>>& centroids, std::span<const double> x) {
    std::size_t best = 0;
    double best_d = distance(metric, centroids[0], x);
    for (std::size_t c = 1; c < centroids.size(); ++c) {
        const double d = distance(metric, centroids[c], x);
        if (d < best_d) {
            best = c;
            best_d = d;
        }
    }
    return best;
}

void update_centroids(Metric metric, const std::vector<std::vector<double>>& rows,
                      const std::vector<std::size_t>& assign, std::vector<std::vector<double>>& centroids) {
    const std::size_t d = rows.front().size();
    for (std::size_t c = 0; c < centroids.size(); ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (assign[i] == c) members.push_back(i);
        }
        if (members.empty()) continue;
        for (std::size_t a = 0; a < d; ++a) {
            if (metric == Metric::Euclidean) {
                double s = 0;
                for (auto i : members) s += rows[i][a];
                centroids[c][a] = s / static_cast<double>(members.size());
            } else {
                std::vector<double> v;
                v.reserve(members.size());
                for (auto i : members) v.push_back(rows[i][a]);
                std::sort(v.begin(), v.end());
                const std::size_t m = v.size() / 2;
                centroids[c][a] = v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2.0;
            }
        }
    }
}

}  // namespace

double kmeans_objective(Metric metric, const std::vector<std::vector<double>>& rows,
                        const std::vector<std::vector<double>>& centroids, std::span<const std::size_t> assignments) {
    double j = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) j += cost(metric, rows[i], centroids[assignments[i]]);
    return j;
}

KMeansModel kmeans_fit(const std::vector<std::vector<double>>& rows, const KMeansOptions& opt) {
    if (opt.k < 1) throw SchemaError("k must be at least 1");
    if (opt.k > rows.size()) {
        throw InfeasibleError("k = " + std::to_string(opt.k) + " exceeds the instance count " + std::to_string(rows.size()));
    }
    if (opt.max_iter < 1) throw SchemaError("max_iter must be at least 1");
    KMeansModel m;
    m.metric = opt.metric;

    std::vector<std::size_t> pick(rows.size());
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    Rng rng(opt.seed);
    // Partial Fisher-Yates: the first k slots become k distinct instances.
    for (std::size_t i = 0; i < opt.k; ++i) std::swap(pick[i], pick[i + rng.index(pick.size() - i)]);
    for (std::size_t c = 0; c < opt.k; ++c) m.centroids.push_back(rows[pick[c]]);

    std::vector<std::size_t> assign(rows.size(), SIZE_MAX);
    for (std::size_t iter = 0; iter < opt.max_iter; ++iter) {
        std::vector<std::size_t> next(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) next[i] = nearest(opt.metric, m.centroids, rows[i]);

        std::vector<std::size_t> sizes(opt.k, 0);
        for (auto c : next) ++sizes[c];
        for (std::size_t c = 0; c < opt.k; ++c) {
            if (sizes[c] > 0) continue;
            std::size_t far = SIZE_MAX;
            double far_d = -1;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sizes[next[i]] < 2) continue;
                const double d = distance(opt.metric, rows[i], m.centroids[next[i]]);
                if (d > far_d) {
                    far = i;
                    far_d = d;
                }
            }
            if (far == SIZE_MAX) break;
            --sizes[next[far]];
            next[far] = c;
            sizes[c] = 1;
            m.centroids[c] = rows[far];
        }

        const bool unchanged = next == assign;
        assign = std::move(next);
        update_centroids(opt.metric, rows, assign, m.centroids);
        const double j = kmeans_objective(opt.metric, rows, m.centroids, assign);
        if (!m.objective_history.empty()) {
            const double prev = m.objective_history.back();
            if (j > prev + 1e-12 * std::max(1.0, std::abs(prev))) {
                throw NumericError("k-means objective increased at iteration " + std::to_string(iter + 1));
            }
        }
        m.objective_history.push_back(j);
        m.iterations = iter + 1;
        if (unchanged) {
            m.converged = true;
            break;
        }
    }
    m.assignments = std::move(assign);
    return m;
}

std::size_t kmeans_assign(const KMeansModel& model, std::span<const double> instance) {
    return nearest(model.metric, model.centroids, instance);
}

}  // namespace vgaml
