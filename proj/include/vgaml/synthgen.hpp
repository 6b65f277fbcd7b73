#pragma once

#include "vgaml/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vgaml {

/// Axis-aligned rectangle of cells [x, x + w) x [y, y + h).
struct Rect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool contains(int px, int py) const { return px >= x && py >= y && px < x + w && py < y + h; }
    bool overlaps(const Rect& o) const { return x < o.x + o.w && o.x < x + w && y < o.y + o.h && o.y < y + h; }
};

struct Room {
    Rect area;
    std::string label;
};

inline constexpr const char* kCorridorLabel = "CIRC-PRI";

struct LayoutSpec {
    int width = 0;
    int height = 0;
    double cell_size = kDefaultCellSize;
    std::vector<Room> rooms;
    std::vector<Rect> corridors;
    /// Picks door positions.
    std::uint64_t seed = 1;
};

/// Carves corridors (labelled CIRC-PRI) and rooms into a blocked raster and
/// opens one door per room through a single wall cell to a corridor. Throws
/// InfeasibleError for out-of-bounds or overlapping rectangles and when some
/// open cell cannot be reached from the others.
FloorPlanGrid generate_office(const LayoutSpec& spec);

/// Procedural spec: horizontal corridors with rows of rooms on both sides,
/// joined by a vertical corridor. The width is searched so the open cell
/// count lands as close as possible to `target_nodes`.
LayoutSpec procedural_spec(std::uint64_t seed, std::size_t target_nodes);

FloorPlanGrid generate_office(std::uint64_t seed, std::size_t target_nodes);

/// Raw labels by mean-depth band, shallowest band first, with the share of
/// open cells each band takes.
struct SignalBand {
    const char* label;
    double share;
};
const std::vector<SignalBand>& signal_bands();

/// Relabels every open cell. Cells are ranked by mean depth (ties by
/// position) and cut into bands; with probability `strength` a cell takes its
/// band's label, otherwise a label drawn uniformly from all bands. Mean
/// depths are computed when not supplied (one per open cell in (y, x) order).
FloorPlanGrid plant_geometry_signal(const FloorPlanGrid& grid, double strength, std::uint64_t seed,
                                    const std::optional<std::vector<double>>& mean_depths = std::nullopt);

/// Node-count targets of the default six-layout corpus.
const std::vector<std::size_t>& default_corpus_targets();

}  // namespace vgaml
