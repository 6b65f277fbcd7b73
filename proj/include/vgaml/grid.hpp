#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vgaml {

inline constexpr double kDefaultCellSize = 0.45;

struct Cell {
    int x = 0;
    int y = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Occupancy raster of one plan. Cell (x, y) covers [x, x+1) x [y, y+1) in
/// cell units; row y = 0 is the first text row. Open cells may carry a raw
/// usage label (empty string = unlabelled).
class FloorPlanGrid {
public:
    /// Throws InfeasibleError when no cell is open and SchemaError when a
    /// blocked cell carries a label or the vectors do not match width*height.
    FloorPlanGrid(int width, int height, double cell_size, std::vector<std::uint8_t> open,
                  std::vector<std::string> labels = {});

    int width() const { return width_; }
    int height() const { return height_; }
    double cell_size() const { return cell_size_; }

    bool in_bounds(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    bool is_open(int x, int y) const { return in_bounds(x, y) && open_[index(x, y)] != 0; }
    const std::string& label(int x, int y) const { return labels_[index(x, y)]; }
    std::size_t open_count() const;

    /// Returns a copy with the given cell blocked (its label dropped).
    FloorPlanGrid with_blocked(int x, int y) const;
    /// Returns a copy with new labels for open cells.
    FloorPlanGrid with_labels(std::vector<std::string> labels) const;

    const std::vector<std::uint8_t>& open_mask() const { return open_; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

    friend bool operator==(const FloorPlanGrid&, const FloorPlanGrid&) = default;

private:
    int width_;
    int height_;
    double cell_size_;
    std::vector<std::uint8_t> open_;
    std::vector<std::string> labels_;
};

/// Reads the grid text format: a "width height cell_size" line, then `height`
/// rows of `width` characters ('#' blocked, '.' open, a letter = open cell
/// labelled through the legend). The legend is a "code,label" CSV.
FloorPlanGrid parse_grid(std::string_view grid_text, std::string_view legend_csv = {});

/// Inverse of parse_grid. Distinct labels get letter codes a..z, A..Z in
/// sorted label order.
std::pair<std::string, std::string> write_grid(const FloorPlanGrid& grid);

}  // namespace vgaml
