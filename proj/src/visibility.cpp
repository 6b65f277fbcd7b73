#include "vgaml/visibility.hpp"

#include "vgaml/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace vgaml {
namespace {

/// Open mask with a one-cell blocked border, so traversal never bounds-checks.
class PaddedMask {
public:
    explicit PaddedMask(const FloorPlanGrid& grid) : stride_(grid.width() + 2), cells_(0) {
        cells_.assign(static_cast<std::size_t>(stride_) * (grid.height() + 2), 0);
        for (int y = 0; y < grid.height(); ++y) {
            for (int x = 0; x < grid.width(); ++x) cells_[at(x, y)] = grid.is_open(x, y) ? 1 : 0;
        }
    }
    std::size_t at(int x, int y) const { return static_cast<std::size_t>(y + 1) * stride_ + (x + 1); }
    bool open(int x, int y) const { return cells_[at(x, y)] != 0; }

private:
    int stride_;
    std::vector<std::uint8_t> cells_;
};

// Walks the cells crossed by the centre-to-centre segment. Coordinates are
// doubled so that centres and cell edges are integers: the segment runs from
// (2ax+1, 2ay+1) to (2bx+1, 2by+1), and the k-th vertical line crossed lies
// (2k-1) doubled units from the start along x. Comparing crossing parameters
// nx/|dx| and ny/|dy| by cross-multiplication keeps everything exact.
bool sight_line(const PaddedMask& mask, Cell a, Cell b, CornerRule rule) {
    const long dx = 2L * (b.x - a.x);
    const long dy = 2L * (b.y - a.y);
    const int sx = dx > 0 ? 1 : (dx < 0 ? -1 : 0);
    const int sy = dy > 0 ? 1 : (dy < 0 ? -1 : 0);
    const long adx = std::labs(dx);
    const long ady = std::labs(dy);

    int cx = a.x, cy = a.y;
    long nx = 1, ny = 1;
    while (cx != b.x || cy != b.y) {
        // crossing parameter along x is nx/adx (infinite when adx == 0)
        const long lhs = adx == 0 ? 1 : nx * ady;
        const long rhs = ady == 0 ? 1 : ny * adx;
        if (adx != 0 && (ady == 0 || lhs < rhs)) {
            cx += sx;
            nx += 2;
        } else if (ady != 0 && (adx == 0 || lhs > rhs)) {
            cy += sy;
            ny += 2;
        } else {
            // exactly through a lattice corner
            const bool side_x = mask.open(cx + sx, cy);
            const bool side_y = mask.open(cx, cy + sy);
            if (rule == CornerRule::BlockOnTouch ? (!side_x || !side_y) : (!side_x && !side_y)) return false;
            cx += sx;
            cy += sy;
            nx += 2;
            ny += 2;
        }
        if (!mask.open(cx, cy)) return false;
    }
    return true;
}

// 4-connected components of open cells. A permitted sight line only passes
// through open cells that are edge-adjacent or joined through an open tangent
// cell, so visible pairs always share a component.
std::vector<std::int32_t> open_components(const FloorPlanGrid& grid) {
    std::vector<std::int32_t> comp(static_cast<std::size_t>(grid.width()) * grid.height(), -1);
    std::int32_t next = 0;
    std::deque<Cell> queue;
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.is_open(x, y) || comp[grid.index(x, y)] >= 0) continue;
            comp[grid.index(x, y)] = next;
            queue.push_back({x, y});
            while (!queue.empty()) {
                const Cell c = queue.front();
                queue.pop_front();
                constexpr int kDx[] = {1, -1, 0, 0};
                constexpr int kDy[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nx = c.x + kDx[k], ny = c.y + kDy[k];
                    if (grid.is_open(nx, ny) && comp[grid.index(nx, ny)] < 0) {
                        comp[grid.index(nx, ny)] = next;
                        queue.push_back({nx, ny});
                    }
                }
            }
            ++next;
        }
    }
    return comp;
}

}  // namespace

bool line_of_sight(const FloorPlanGrid& grid, Cell a, Cell b, CornerRule rule) {
    if (!grid.is_open(a.x, a.y) || !grid.is_open(b.x, b.y)) return false;
    return sight_line(PaddedMask(grid), a, b, rule);
}

VisibilityGraph::VisibilityGraph(int width, std::vector<Cell> cells, std::vector<std::int32_t> node_of_cell,
                                 std::vector<std::size_t> offsets, std::vector<std::uint32_t> targets)
    : width_(width),
      cells_(std::move(cells)),
      node_of_cell_(std::move(node_of_cell)),
      offsets_(std::move(offsets)),
      targets_(std::move(targets)) {}

std::optional<std::size_t> VisibilityGraph::node_at(int x, int y) const {
    if (x < 0 || y < 0 || x >= width_) return std::nullopt;
    const auto i = static_cast<std::size_t>(y) * width_ + x;
    if (i >= node_of_cell_.size() || node_of_cell_[i] < 0) return std::nullopt;
    return static_cast<std::size_t>(node_of_cell_[i]);
}

bool VisibilityGraph::adjacent(std::size_t a, std::size_t b) const {
    const auto n = neighbors(a);
    return std::binary_search(n.begin(), n.end(), static_cast<std::uint32_t>(b));
}

VisibilityGraph build_visibility_graph(const FloorPlanGrid& grid, CornerRule rule, unsigned jobs) {
    std::vector<Cell> cells;
    std::vector<std::int32_t> node_of_cell(static_cast<std::size_t>(grid.width()) * grid.height(), -1);
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (grid.is_open(x, y)) {
                node_of_cell[grid.index(x, y)] = static_cast<std::int32_t>(cells.size());
                cells.push_back({x, y});
            }
        }
    }
    const std::size_t n = cells.size();
    const PaddedMask mask(grid);
    const auto comp = open_components(grid);

    // later[i] = visible nodes j > i
    std::vector<std::vector<std::uint32_t>> later(n);
    parallel_for(n, jobs, [&](std::size_t i) {
        const Cell a = cells[i];
        const auto ca = comp[grid.index(a.x, a.y)];
        auto& out = later[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Cell b = cells[j];
            if (comp[grid.index(b.x, b.y)] != ca) continue;
            if (sight_line(mask, a, b, rule)) out.push_back(static_cast<std::uint32_t>(j));
        }
    });

    std::vector<std::size_t> offsets(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        offsets[i + 1] += later[i].size();
        for (auto j : later[i]) ++offsets[j + 1];
    }
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    std::vector<std::uint32_t> targets(offsets[n]);
    std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
    // Visiting sources in ascending order appends smaller neighbours before
    // each node's own (larger) list, so every list ends up sorted.
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : later[i]) {
            targets[fill[i]++] = j;
            targets[fill[j]++] = static_cast<std::uint32_t>(i);
        }
        std::vector<std::uint32_t>().swap(later[i]);
    }
    return {grid.width(), std::move(cells), std::move(node_of_cell), std::move(offsets), std::move(targets)};
}

}  // namespace vgaml
