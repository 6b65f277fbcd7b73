#include "vgaml/som.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vgaml {

namespace {

void check(const SomOptions& o) {
    if (o.width == 0 || o.height == 0) throw SchemaError("SOM lattice dimensions must be positive");
    if (o.epochs == 0) throw SchemaError("SOM needs at least one epoch");
    if (!(o.rate0 >= 0)) throw SchemaError("SOM learning rate must be nonnegative");
}

double initial_radius(const SomOptions& o) {
    return o.radius0 >= 0 ? o.radius0 : static_cast<double>(std::max(o.width, o.height)) / 2.0;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return s;
}

}  // namespace

double som_rate(const SomOptions& o, std::size_t epoch) {
    return o.rate0 * (1.0 - static_cast<double>(epoch) / static_cast<double>(o.epochs));
}

double som_radius(const SomOptions& o, std::size_t epoch) {
    return initial_radius(o) * (1.0 - static_cast<double>(epoch) / static_cast<double>(o.epochs));
}

SomLattice som_init(const std::vector<std::vector<double>>& rows, const SomOptions& o) {
    check(o);
    if (rows.empty()) throw SchemaError("cannot train a SOM on an empty dataset");
    SomLattice l;
    l.width = o.width;
    l.height = o.height;
    Rng rng(o.seed);
    for (std::size_t u = 0; u < o.width * o.height; ++u) l.weights.push_back(rows[rng.index(rows.size())]);
    return l;
}

std::size_t som_map(const SomLattice& l, std::span<const double> x) {
    std::size_t best = 0;
    double best_d = squared_distance(l.weights[0], x);
    for (std::size_t u = 1; u < l.units(); ++u) {
        const double d = squared_distance(l.weights[u], x);
        if (d < best_d) {
            best = u;
            best_d = d;
        }
    }
    return best;
}

void som_update(SomLattice& l, std::span<const double> x, double rate, double radius) {
    const std::size_t bmu = som_map(l, x);
    const auto bx = static_cast<double>(bmu % l.width), by = static_cast<double>(bmu / l.width);
    for (std::size_t u = 0; u < l.units(); ++u) {
        const double dx = static_cast<double>(u % l.width) - bx, dy = static_cast<double>(u / l.width) - by;
        const double d2 = dx * dx + dy * dy;
        double impact;
        if (radius <= 0) {
            if (u != bmu) continue;
            impact = 1.0;
        } else {
            if (d2 > radius * radius) continue;
            impact = std::exp(-d2 / (2.0 * radius * radius));
        }
        auto& w = l.weights[u];
        for (std::size_t a = 0; a < w.size(); ++a) w[a] += rate * impact * (x[a] - w[a]);
    }
}

SomLattice som_fit(const std::vector<std::vector<double>>& rows, const SomOptions& o) {
    SomLattice l = som_init(rows, o);
    Rng rng(o.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t e = 0; e < o.epochs; ++e) {
        rng.shuffle(std::span<std::size_t>(order));
        const double rate = som_rate(o, e), radius = som_radius(o, e);
        for (auto i : order) som_update(l, rows[i], rate, radius);
    }
    return l;
}

double quantization_error(const SomLattice& l, const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return 0;
    double s = 0;
    for (const auto& r : rows) s += std::sqrt(squared_distance(l.weights[som_map(l, r)], r));
    return s / static_cast<double>(rows.size());
}

}  // namespace vgaml
