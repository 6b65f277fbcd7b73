#include "vgaml/synthgen.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/measures.hpp"
#include "vgaml/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vgaml {

namespace {

void require_inside(const Rect& r, const LayoutSpec& spec, const std::string& what) {
    if (r.w <= 0 || r.h <= 0 || r.x < 0 || r.y < 0 || r.x + r.w > spec.width || r.y + r.h > spec.height) {
        throw InfeasibleError(what + " lies outside the " + std::to_string(spec.width) + "x" +
                              std::to_string(spec.height) + " layout");
    }
}

std::size_t reachable_from_first(const std::vector<std::uint8_t>& open, int width, int height) {
    const auto start = std::find(open.begin(), open.end(), 1);
    if (start == open.end()) return 0;
    std::vector<std::uint8_t> seen(open.size(), 0);
    std::vector<std::size_t> stack{static_cast<std::size_t>(start - open.begin())};
    seen[stack.back()] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        const auto i = stack.back();
        stack.pop_back();
        ++count;
        const int x = static_cast<int>(i % width), y = static_cast<int>(i / width);
        const int nx[4] = {x + 1, x - 1, x, x};
        const int ny[4] = {y, y, y + 1, y - 1};
        for (int d = 0; d < 4; ++d) {
            if (nx[d] < 0 || ny[d] < 0 || nx[d] >= width || ny[d] >= height) continue;
            const auto j = static_cast<std::size_t>(ny[d]) * width + nx[d];
            if (open[j] && !seen[j]) {
                seen[j] = 1;
                stack.push_back(j);
            }
        }
    }
    return count;
}

}  // namespace

FloorPlanGrid generate_office(const LayoutSpec& spec) {
    if (spec.width <= 0 || spec.height <= 0) throw InfeasibleError("layout dimensions must be positive");
    for (std::size_t i = 0; i < spec.corridors.size(); ++i) require_inside(spec.corridors[i], spec, "corridor " + std::to_string(i));
    for (std::size_t i = 0; i < spec.rooms.size(); ++i) {
        require_inside(spec.rooms[i].area, spec, "room " + std::to_string(i));
        for (std::size_t j = 0; j < i; ++j) {
            if (spec.rooms[i].area.overlaps(spec.rooms[j].area)) {
                throw InfeasibleError("rooms " + std::to_string(j) + " and " + std::to_string(i) + " overlap");
            }
        }
        for (std::size_t c = 0; c < spec.corridors.size(); ++c) {
            if (spec.rooms[i].area.overlaps(spec.corridors[c])) {
                throw InfeasibleError("room " + std::to_string(i) + " overlaps corridor " + std::to_string(c));
            }
        }
    }
    const auto cells = static_cast<std::size_t>(spec.width) * spec.height;
    std::vector<std::uint8_t> open(cells, 0);
    std::vector<std::string> labels(cells);
    auto idx = [&](int x, int y) { return static_cast<std::size_t>(y) * spec.width + x; };
    auto carve = [&](const Rect& r, const std::string& label) {
        for (int y = r.y; y < r.y + r.h; ++y) {
            for (int x = r.x; x < r.x + r.w; ++x) {
                open[idx(x, y)] = 1;
                labels[idx(x, y)] = label;
            }
        }
    };
    for (const auto& c : spec.corridors) carve(c, kCorridorLabel);
    std::vector<std::uint8_t> corridor_mask = open;
    for (const auto& r : spec.rooms) carve(r.area, r.label);

    Rng rng(spec.seed);
    for (std::size_t i = 0; i < spec.rooms.size(); ++i) {
        const auto& room = spec.rooms[i];
        const Rect& a = room.area;
        // Already touching a corridor: no door needed.
        bool touching = false;
        struct Door {
            int x, y;
        };
        std::vector<Door> doors;
        auto corridor_at = [&](int x, int y) {
            return x >= 0 && y >= 0 && x < spec.width && y < spec.height && corridor_mask[idx(x, y)];
        };
        for (int x = a.x; x < a.x + a.w; ++x) {
            touching = touching || corridor_at(x, a.y - 1) || corridor_at(x, a.y + a.h);
            if (corridor_at(x, a.y - 2) && !open[idx(x, a.y - 1)]) doors.push_back({x, a.y - 1});
            if (corridor_at(x, a.y + a.h + 1) && !open[idx(x, a.y + a.h)]) doors.push_back({x, a.y + a.h});
        }
        for (int y = a.y; y < a.y + a.h; ++y) {
            touching = touching || corridor_at(a.x - 1, y) || corridor_at(a.x + a.w, y);
            if (corridor_at(a.x - 2, y) && !open[idx(a.x - 1, y)]) doors.push_back({a.x - 1, y});
            if (corridor_at(a.x + a.w + 1, y) && !open[idx(a.x + a.w, y)]) doors.push_back({a.x + a.w, y});
        }
        if (touching || doors.empty()) continue;
        const auto d = doors[rng.index(doors.size())];
        open[idx(d.x, d.y)] = 1;
        labels[idx(d.x, d.y)] = room.label;
    }
    const auto total = static_cast<std::size_t>(std::count(open.begin(), open.end(), 1));
    if (total == 0) throw InfeasibleError("layout has no open cells");
    if (reachable_from_first(open, spec.width, spec.height) != total) {
        throw InfeasibleError("layout has rooms unreachable from the corridors");
    }
    return FloorPlanGrid(spec.width, spec.height, spec.cell_size, std::move(open), std::move(labels));
}

namespace {

const char* const kRoomLabels[] = {"WRKSP-OPN", "WRKSP-CEL", "MTG-BKB", "OTHFCL-TEA", "OTHFCL-STO", "OTHFCL-PRC"};

LayoutSpec spec_for_width(std::uint64_t seed, int bands, int inner_width) {
    Rng rng(seed);
    constexpr int kCorridor = 3;
    LayoutSpec spec;
    spec.seed = seed;
    // Column 0 and the last column are outer walls; the vertical corridor
    // runs down x = 1..3 and rooms start after a wall at x = 4.
    spec.width = inner_width + kCorridor + 3;
    int y = 1;
    std::vector<Rect> horizontal;
    for (int b = 0; b < bands; ++b) {
        const int upper_depth = 5 + static_cast<int>(rng.index(8));
        const int lower_depth = 5 + static_cast<int>(rng.index(8));
        const int corridor_y = y + upper_depth + 1;
        auto row_of_rooms = [&](int top, int depth) {
            int x = kCorridor + 2;
            const int end = spec.width - 1;
            while (x < end) {
                int w = rng.bernoulli(0.25) ? 14 + static_cast<int>(rng.index(20)) : 3 + static_cast<int>(rng.index(9));
                if (end - (x + w) < 3) w = end - x;
                const char* label = kRoomLabels[rng.index(std::size(kRoomLabels))];
                spec.rooms.push_back({{x, top, w, depth}, label});
                x += w + 1;
            }
        };
        row_of_rooms(y, upper_depth);
        horizontal.push_back({kCorridor + 1, corridor_y, spec.width - kCorridor - 2, kCorridor});
        row_of_rooms(corridor_y + kCorridor + 1, lower_depth);
        y = corridor_y + kCorridor + 1 + lower_depth + 1;
    }
    spec.height = y;
    spec.corridors.push_back({1, 1, kCorridor, spec.height - 2});
    for (const auto& h : horizontal) spec.corridors.push_back(h);
    return spec;
}

std::size_t open_cells(const LayoutSpec& spec) {
    std::size_t n = 0;
    for (const auto& c : spec.corridors) n += static_cast<std::size_t>(c.w) * c.h;
    for (const auto& r : spec.rooms) n += static_cast<std::size_t>(r.area.w) * r.area.h;
    return n;
}

}  // namespace

LayoutSpec procedural_spec(std::uint64_t seed, std::size_t target_nodes) {
    if (target_nodes < 100) throw InfeasibleError("procedural layouts need a target of at least 100 cells");
    const int bands = std::clamp(static_cast<int>(std::lround(std::sqrt(static_cast<double>(target_nodes)) / 45.0)), 1, 8);
    int lo = 8, hi = 4000;
    LayoutSpec best;
    std::size_t best_gap = SIZE_MAX;
    while (lo <= hi) {
        const int mid = (lo + hi) / 2;
        auto spec = spec_for_width(seed, bands, mid);
        const auto n = open_cells(spec);
        const auto gap = n > target_nodes ? n - target_nodes : target_nodes - n;
        if (gap < best_gap) {
            best_gap = gap;
            best = std::move(spec);
        }
        if (n < target_nodes) {
            lo = mid + 1;
        } else {
            hi = mid - 1;
        }
    }
    return best;
}

FloorPlanGrid generate_office(std::uint64_t seed, std::size_t target_nodes) {
    return generate_office(procedural_spec(seed, target_nodes));
}

const std::vector<SignalBand>& signal_bands() {
    static const std::vector<SignalBand> bands = {
        {"WRKSP-OPN", 0.30}, {"CIRC-PRI", 0.20},   {"WRKSP-CEL", 0.15},
        {"MTG-BKB", 0.15},   {"OTHFCL-TEA", 0.10}, {"OTHFCL-STO", 0.10},
    };
    return bands;
}

FloorPlanGrid plant_geometry_signal(const FloorPlanGrid& grid, double strength, std::uint64_t seed,
                                    const std::optional<std::vector<double>>& mean_depths) {
    if (!(strength >= 0 && strength <= 1)) throw SchemaError("signal strength must lie in [0, 1]");
    std::vector<std::size_t> cells;
    for (int y = 0; y < grid.height(); ++y) {
        for (int x = 0; x < grid.width(); ++x) {
            if (grid.is_open(x, y)) cells.push_back(grid.index(x, y));
        }
    }
    std::vector<double> md;
    if (mean_depths) {
        if (mean_depths->size() != cells.size()) throw SchemaError("one mean depth per open cell is required");
        md = *mean_depths;
    } else {
        for (const auto& m : compute_all_measures(grid)) md.push_back(m.record.visual_mean_depth);
    }
    std::vector<std::size_t> rank(cells.size());
    std::iota(rank.begin(), rank.end(), 0);
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return md[a] < md[b]; });

    const auto& bands = signal_bands();
    std::vector<std::size_t> band_of(cells.size());
    double cumulative = 0;
    std::size_t pos = 0;
    for (std::size_t b = 0; b < bands.size(); ++b) {
        cumulative += bands[b].share;
        const auto end = b + 1 == bands.size() ? cells.size()
                                               : static_cast<std::size_t>(std::llround(cumulative * static_cast<double>(cells.size())));
        for (; pos < end && pos < cells.size(); ++pos) band_of[rank[pos]] = b;
    }
    Rng rng(seed);
    std::vector<std::string> labels(grid.labels().size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const bool keep = rng.uniform() < strength;
        const auto random_band = rng.index(bands.size());
        labels[cells[i]] = bands[keep ? band_of[i] : random_band].label;
    }
    return grid.with_labels(std::move(labels));
}

const std::vector<std::size_t>& default_corpus_targets() {
    static const std::vector<std::size_t> targets = {500, 1500, 3500, 7000, 12000, 20000};
    return targets;
}

}  // namespace vgaml
