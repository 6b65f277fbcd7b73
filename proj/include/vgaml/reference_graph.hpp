#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vgaml {

enum class ReferenceGraphKind { DiamondHH, CornerGridP, BipartiteTekl };

inline constexpr ReferenceGraphKind kAllReferenceKinds[] = {
    ReferenceGraphKind::DiamondHH, ReferenceGraphKind::CornerGridP, ReferenceGraphKind::BipartiteTekl};

std::string_view reference_kind_name(ReferenceGraphKind kind);
/// Accepts "hh", "p", "pvalue", "tekl" (case-insensitive).
ReferenceGraphKind parse_reference_kind(std::string_view text);

/// Undirected graph as adjacency lists. Node 0 is the root for the diamond
/// and corner-grid graphs.
struct ReferenceGraph {
    ReferenceGraphKind kind{};
    std::vector<std::vector<std::uint32_t>> adjacency;
    std::size_t size() const { return adjacency.size(); }
};

/// Level widths of the diamond graph on k nodes, root level first.
std::vector<std::uint64_t> diamond_levels(std::uint64_t k);

/// Cells (x, y) of the corner-rooted lattice on k nodes in insertion order;
/// the root (0, 0) comes first.
std::vector<std::pair<std::uint32_t, std::uint32_t>> corner_grid_cells(std::uint64_t k);

/// Explicit graph with exactly k nodes. Throws NumericError for k < 2.
ReferenceGraph build_reference_graph(ReferenceGraphKind kind, std::uint64_t k);

/// Root mean depth for the diamond and corner grid, graph-average mean depth
/// for the bipartite graph. Memoized per (kind, k); thread-safe.
double reference_mean_depth(ReferenceGraphKind kind, std::uint64_t k);

}  // namespace vgaml
