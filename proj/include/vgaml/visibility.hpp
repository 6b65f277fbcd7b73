#pragma once

#include "vgaml/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace vgaml {

/// How a sight line that passes exactly through a lattice corner is treated.
/// The two cells that share the corner but are not crossed by the line are
/// its "tangent" cells.
enum class CornerRule {
    /// Blocked if either tangent cell is blocked: the closed segment may not
    /// touch any blocked cell. This is the default.
    BlockOnTouch,
    /// Blocked only if both tangent cells are blocked (the line would squeeze
    /// between two diagonal blocked cells).
    BlockOnPinch,
};

inline constexpr CornerRule kDefaultCornerRule = CornerRule::BlockOnTouch;

/// True when the segment between the centres of open cells a and b crosses
/// the interior of no blocked cell and passes no corner forbidden by `rule`.
/// Exact integer arithmetic. Cells outside the grid count as blocked.
bool line_of_sight(const FloorPlanGrid& grid, Cell a, Cell b, CornerRule rule = kDefaultCornerRule);

/// Visibility graph over the open cells of a grid. Nodes are numbered in
/// (y, x) order; neighbour lists are sorted; no self edges; symmetric.
class VisibilityGraph {
public:
    VisibilityGraph() = default;
    VisibilityGraph(int width, std::vector<Cell> cells, std::vector<std::int32_t> node_of_cell,
                    std::vector<std::size_t> offsets, std::vector<std::uint32_t> targets);

    std::size_t size() const { return cells_.size(); }
    Cell cell(std::size_t node) const { return cells_[node]; }
    std::optional<std::size_t> node_at(int x, int y) const;

    std::span<const std::uint32_t> neighbors(std::size_t node) const {
        return {targets_.data() + offsets_[node], offsets_[node + 1] - offsets_[node]};
    }
    std::size_t degree(std::size_t node) const { return offsets_[node + 1] - offsets_[node]; }
    bool adjacent(std::size_t a, std::size_t b) const;
    /// Number of undirected edges.
    std::size_t edge_count() const { return targets_.size() / 2; }

private:
    int width_ = 0;
    std::vector<Cell> cells_;
    std::vector<std::int32_t> node_of_cell_;
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> targets_;
};

/// Connects every pair of mutually visible open cells. Sources are split
/// across `jobs` threads; the result does not depend on `jobs`.
VisibilityGraph build_visibility_graph(const FloorPlanGrid& grid, CornerRule rule = kDefaultCornerRule,
                                       unsigned jobs = 1);

}  // namespace vgaml
