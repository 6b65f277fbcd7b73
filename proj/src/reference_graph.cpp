#include "vgaml/reference_graph.hpp"

#include "vgaml/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace vgaml {

std::string_view reference_kind_name(ReferenceGraphKind kind) {
    switch (kind) {
        case ReferenceGraphKind::DiamondHH: return "HH";
        case ReferenceGraphKind::CornerGridP: return "P-value";
        case ReferenceGraphKind::BipartiteTekl: return "Tekl";
    }
    return "?";
}

ReferenceGraphKind parse_reference_kind(std::string_view text) {
    std::string t;
    for (char c : text) {
        if (c != '-' && c != '_') t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (t == "hh" || t == "diamond") return ReferenceGraphKind::DiamondHH;
    if (t == "p" || t == "pvalue" || t == "corner" || t == "cornergrid") return ReferenceGraphKind::CornerGridP;
    if (t == "tekl" || t == "bipartite") return ReferenceGraphKind::BipartiteTekl;
    throw SchemaError("unknown reference graph '" + std::string(text) + "'");
}

namespace {

void require_size(std::uint64_t k) {
    if (k < 2) throw NumericError("reference graph needs at least 2 nodes, got " + std::to_string(k));
}

void link(ReferenceGraph& g, std::uint32_t a, std::uint32_t b) {
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
}

}  // namespace

std::vector<std::uint64_t> diamond_levels(std::uint64_t k) {
    require_size(k);
    std::uint64_t m = 0;
    while (3 * (std::uint64_t{1} << m) - 2 < k) ++m;
    std::vector<std::uint64_t> levels;
    for (std::uint64_t i = 0; i <= m; ++i) levels.push_back(std::uint64_t{1} << i);
    for (std::uint64_t i = m; i-- > 0;) levels.push_back(std::uint64_t{1} << i);

    std::uint64_t total = 3 * (std::uint64_t{1} << m) - 2;
    for (; total > k; --total) {
        std::size_t at = 0;
        for (std::size_t l = 1; l < levels.size(); ++l) {
            if (levels[l] >= levels[at]) at = l;
        }
        if (--levels[at] == 0) levels.erase(levels.begin() + static_cast<std::ptrdiff_t>(at));
    }
    return levels;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> corner_grid_cells(std::uint64_t k) {
    require_size(k);
    std::uint32_t n = 1;
    while (std::uint64_t{n + 1} * (n + 1) <= k) ++n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    cells.reserve(k);
    // Square in depth order so the root is first.
    for (std::uint32_t d = 0; d <= 2 * (n - 1); ++d) {
        for (std::uint32_t x = 0; x < n; ++x) {
            if (d >= x && d - x < n) cells.emplace_back(x, d - x);
        }
    }
    // Partial shell: column x = n and row y = n, shallowest first, corner last.
    for (std::uint32_t j = 0; j < n && cells.size() < k; ++j) {
        cells.emplace_back(n, j);
        if (cells.size() < k) cells.emplace_back(j, n);
    }
    if (cells.size() < k) cells.emplace_back(n, n);
    return cells;
}

ReferenceGraph build_reference_graph(ReferenceGraphKind kind, std::uint64_t k) {
    require_size(k);
    ReferenceGraph g;
    g.kind = kind;
    g.adjacency.resize(k);
    switch (kind) {
        case ReferenceGraphKind::DiamondHH: {
            const auto levels = diamond_levels(k);
            std::uint32_t start = 0;
            for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
                const auto next = static_cast<std::uint32_t>(start + levels[l]);
                for (std::uint32_t a = start; a < next; ++a) {
                    for (std::uint32_t b = next; b < next + levels[l + 1]; ++b) link(g, a, b);
                }
                start = next;
            }
            break;
        }
        case ReferenceGraphKind::CornerGridP: {
            const auto cells = corner_grid_cells(k);
            std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> index;
            for (std::uint32_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
            for (std::uint32_t i = 0; i < cells.size(); ++i) {
                const auto [x, y] = cells[i];
                if (auto it = index.find({x + 1, y}); it != index.end()) link(g, i, it->second);
                if (auto it = index.find({x, y + 1}); it != index.end()) link(g, i, it->second);
            }
            break;
        }
        case ReferenceGraphKind::BipartiteTekl: {
            const auto a = static_cast<std::uint32_t>(k / 2);
            for (std::uint32_t i = 0; i < a; ++i) {
                for (auto j = a; j < k; ++j) link(g, i, j);
            }
            break;
        }
    }
    for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
    return g;
}

namespace {

double compute_reference_mean_depth(ReferenceGraphKind kind, std::uint64_t k) {
    const double others = static_cast<double>(k - 1);
    switch (kind) {
        case ReferenceGraphKind::DiamondHH: {
            const auto levels = diamond_levels(k);
            std::uint64_t total = 0;
            for (std::size_t l = 1; l < levels.size(); ++l) total += l * levels[l];
            return static_cast<double>(total) / others;
        }
        case ReferenceGraphKind::CornerGridP: {
            std::uint64_t total = 0;
            for (const auto& [x, y] : corner_grid_cells(k)) total += x + y;
            return static_cast<double>(total) / others;
        }
        case ReferenceGraphKind::BipartiteTekl: {
            const std::uint64_t a = k / 2, b = k - a;
            // A node on side A sees all of B at depth 1 and the rest of A at depth 2.
            const std::uint64_t sum_a = b + 2 * (a - 1);
            const std::uint64_t sum_b = a + 2 * (b - 1);
            return static_cast<double>(a * sum_a + b * sum_b) / (others * static_cast<double>(k));
        }
    }
    return 0;
}

}  // namespace

double reference_mean_depth(ReferenceGraphKind kind, std::uint64_t k) {
    require_size(k);
    static std::mutex mutex;
    static std::map<std::pair<int, std::uint64_t>, double> memo;
    const std::pair<int, std::uint64_t> key{static_cast<int>(kind), k};
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    const double value = compute_reference_mean_depth(kind, k);
    std::lock_guard lock(mutex);
    return memo.emplace(key, value).first->second;
}

}  // namespace vgaml
