#include "vgaml/grid.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace vgaml {

FloorPlanGrid::FloorPlanGrid(int width, int height, double cell_size, std::vector<std::uint8_t> open,
                             std::vector<std::string> labels)
    : width_(width), height_(height), cell_size_(cell_size), open_(std::move(open)), labels_(std::move(labels)) {
    if (width <= 0 || height <= 0) throw SchemaError("grid dimensions must be positive");
    if (!(cell_size > 0)) throw SchemaError("cell size must be positive");
    const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (open_.size() != n) throw SchemaError("open mask size does not match grid dimensions");
    if (labels_.empty()) labels_.resize(n);
    if (labels_.size() != n) throw SchemaError("label vector size does not match grid dimensions");
    for (std::size_t i = 0; i < n; ++i) {
        if (!open_[i] && !labels_[i].empty()) throw SchemaError("blocked cell carries a label");
    }
    if (open_count() == 0) throw InfeasibleError("grid has no open cells");
}

std::size_t FloorPlanGrid::open_count() const {
    return static_cast<std::size_t>(std::count_if(open_.begin(), open_.end(), [](auto v) { return v != 0; }));
}

FloorPlanGrid FloorPlanGrid::with_blocked(int x, int y) const {
    auto open = open_;
    auto labels = labels_;
    open[index(x, y)] = 0;
    labels[index(x, y)].clear();
    return {width_, height_, cell_size_, std::move(open), std::move(labels)};
}

FloorPlanGrid FloorPlanGrid::with_labels(std::vector<std::string> labels) const {
    return {width_, height_, cell_size_, open_, std::move(labels)};
}

FloorPlanGrid parse_grid(std::string_view grid_text, std::string_view legend_csv) {
    std::map<char, std::string> legend;
    if (!legend_csv.empty()) {
        const auto rows = csv::parse(legend_csv);
        for (std::size_t r = 1; r < rows.size(); ++r) {
            if (rows[r].size() != 2 || rows[r][0].size() != 1) {
                throw ParseError("legend row " + std::to_string(r) + ": expected 'code,label' with a one-letter code");
            }
            legend[rows[r][0][0]] = rows[r][1];
        }
    }

    std::vector<std::string> lines;
    {
        std::string line;
        std::istringstream in{std::string(grid_text)};
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            lines.push_back(line);
        }
        while (!lines.empty() && lines.back().empty()) lines.pop_back();
    }
    if (lines.empty()) throw ParseError("grid: empty file");

    int width = 0, height = 0;
    double cell_size = 0;
    {
        std::istringstream head(lines.front());
        std::string extra;
        if (!(head >> width >> height >> cell_size) || (head >> extra)) {
            throw ParseError("grid: first line must be 'width height cell_size'");
        }
    }
    if (width <= 0 || height <= 0) throw ParseError("grid: dimensions must be positive");
    if (lines.size() != static_cast<std::size_t>(height) + 1) {
        throw ParseError("grid: expected " + std::to_string(height) + " rows, found " +
                         std::to_string(lines.size() - 1));
    }

    const auto n = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> open(n, 0);
    std::vector<std::string> labels(n);
    for (int y = 0; y < height; ++y) {
        const auto& row = lines[static_cast<std::size_t>(y) + 1];
        if (row.size() != static_cast<std::size_t>(width)) {
            throw ParseError("grid row " + std::to_string(y) + ": expected " + std::to_string(width) +
                             " characters, found " + std::to_string(row.size()));
        }
        for (int x = 0; x < width; ++x) {
            const char c = row[static_cast<std::size_t>(x)];
            const auto i = static_cast<std::size_t>(y) * width + x;
            if (c == '#') continue;
            open[i] = 1;
            if (c == '.') continue;
            const auto it = legend.find(c);
            if (it == legend.end()) {
                throw ParseError(std::string("grid: code '") + c + "' at (" + std::to_string(x) + ", " +
                                 std::to_string(y) + ") is not in the legend");
            }
            labels[i] = it->second;
        }
    }
    return {width, height, cell_size, std::move(open), std::move(labels)};
}

std::pair<std::string, std::string> write_grid(const FloorPlanGrid& grid) {
    static constexpr std::string_view kCodes = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::set<std::string> distinct;
    for (const auto& l : grid.labels()) {
        if (!l.empty()) distinct.insert(l);
    }
    if (distinct.size() > kCodes.size()) throw SchemaError("grid: more than 52 distinct labels");

    std::map<std::string, char> code;
    std::string legend = "code,label\n";
    for (const auto& l : distinct) {
        const char c = kCodes[code.size()];
        code[l] = c;
        legend += std::string(1, c) + "," + csv::escape(l) + "\n";
    }

    std::string text = std::to_string(grid.width()) + " " + std::to_string(grid.height()) + " " +
                       csv::format_exact(grid.cell_size()) + "\n";
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (!grid.is_open(x, y)) {
                text.push_back('#');
            } else if (grid.label(x, y).empty()) {
                text.push_back('.');
            } else {
                text.push_back(code.at(grid.label(x, y)));
            }
        }
        text.push_back('\n');
    }
    return {text, legend};
}

}  // namespace vgaml
