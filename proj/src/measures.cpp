#include "vgaml/measures.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/integration.hpp"
#include "vgaml/label_map.hpp"
#include "vgaml/parallel.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <deque>

namespace vgaml {

std::uint64_t DepthHistogram::reachable() const {
    std::uint64_t n = 0;
    for (auto c : counts) n += c;
    return n;
}

std::uint64_t DepthHistogram::total_depth() const {
    std::uint64_t t = 0;
    for (std::size_t d = 1; d < counts.size(); ++d) t += d * counts[d];
    return t;
}

double DepthHistogram::frequency(std::size_t d) const {
    return static_cast<double>(counts[d]) / static_cast<double>(reachable());
}

DepthHistogram visual_depths(const VisibilityGraph& g, std::size_t node) {
    std::vector<std::uint32_t> depth(g.size(), UINT32_MAX);
    std::deque<std::uint32_t> queue{static_cast<std::uint32_t>(node)};
    depth[node] = 0;
    DepthHistogram h;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        for (auto u : g.neighbors(v)) {
            if (depth[u] != UINT32_MAX) continue;
            depth[u] = depth[v] + 1;
            if (h.counts.size() <= depth[u]) h.counts.resize(depth[u] + 1, 0);
            ++h.counts[depth[u]];
            queue.push_back(u);
        }
    }
    h.unreachable = g.size() - 1 - h.reachable();
    return h;
}

double mean_depth(const DepthHistogram& h) {
    const auto n = h.reachable();
    if (n == 0) throw NumericError("mean depth is undefined for a node with no reachable nodes");
    return static_cast<double>(h.total_depth()) / static_cast<double>(n);
}

std::size_t connectivity(const VisibilityGraph& g, std::size_t node) { return g.degree(node); }

double point_first_moment(const FloorPlanGrid& grid, const VisibilityGraph& g, std::size_t node) {
    const Cell a = g.cell(node);
    double sum = 0;
    for (auto u : g.neighbors(node)) {
        const Cell b = g.cell(u);
        const double dx = b.x - a.x, dy = b.y - a.y;
        sum += std::sqrt(dx * dx + dy * dy);
    }
    return sum * grid.cell_size();
}

double point_second_moment(const FloorPlanGrid& grid, const VisibilityGraph& g, std::size_t node) {
    const Cell a = g.cell(node);
    double sum = 0;
    for (auto u : g.neighbors(node)) {
        const Cell b = g.cell(u);
        const double dx = b.x - a.x, dy = b.y - a.y;
        sum += dx * dx + dy * dy;
    }
    return sum * grid.cell_size() * grid.cell_size();
}

double point_depth_entropy(const DepthHistogram& h) {
    if (h.reachable() == 0) return 0;
    double e = 0;
    for (std::size_t d = 1; d < h.counts.size(); ++d) {
        if (h.counts[d] == 0) continue;
        const double p = h.frequency(d);
        e -= p * std::log(p);
    }
    return e;
}

double relativized_entropy(const DepthHistogram& h, RelativisedSign sign) {
    if (h.reachable() == 0) return 0;
    const double mean = mean_depth(h);
    const double log_mean = std::log(mean);
    double e = 0;
    for (std::size_t d = 1; d < h.counts.size(); ++d) {
        if (h.counts[d] == 0) continue;
        const double p = h.frequency(d);
        const double log_q = static_cast<double>(d) * log_mean - std::lgamma(static_cast<double>(d) + 1.0) - mean;
        e -= p * (std::log(p) - log_q);
    }
    return sign == RelativisedSign::Printed ? e : -e;
}

namespace {

constexpr std::size_t kWords = 4;
constexpr std::size_t kBatch = 64 * kWords;
using Lanes = std::array<std::uint64_t, kWords>;

bool any(const Lanes& l) {
    std::uint64_t acc = 0;
    for (auto w : l) acc |= w;
    return acc != 0;
}

// Breadth-first search from up to kBatch consecutive sources at once: bit b
// of a node's lane word is set when source (first + b) has reached it.
void batch_depths(const VisibilityGraph& g, std::size_t first, std::size_t count,
                  std::vector<DepthHistogram>& out) {
    const std::size_t n = g.size();
    std::vector<Lanes> seen(n, Lanes{}), frontier(n, Lanes{}), next(n, Lanes{});
    for (std::size_t b = 0; b < count; ++b) {
        seen[first + b][b / 64] |= std::uint64_t{1} << (b % 64);
        frontier[first + b][b / 64] |= std::uint64_t{1} << (b % 64);
    }
    for (std::size_t level = 1;; ++level) {
        for (std::size_t v = 0; v < n; ++v) {
            const Lanes f = frontier[v];
            if (!any(f)) continue;
            for (auto u : g.neighbors(v)) {
                auto& dst = next[u];
                for (std::size_t w = 0; w < kWords; ++w) dst[w] |= f[w];
            }
        }
        bool grew = false;
        for (std::size_t u = 0; u < n; ++u) {
            auto& nu = next[u];
            for (std::size_t w = 0; w < kWords; ++w) {
                std::uint64_t fresh = nu[w] & ~seen[u][w];
                nu[w] = fresh;
                seen[u][w] |= fresh;
                while (fresh) {
                    const auto bit = static_cast<std::size_t>(std::countr_zero(fresh));
                    fresh &= fresh - 1;
                    auto& counts = out[first + w * 64 + bit].counts;
                    if (counts.size() <= level) counts.resize(level + 1, 0);
                    ++counts[level];
                    grew = true;
                }
            }
        }
        if (!grew) break;
        frontier.swap(next);
        std::fill(next.begin(), next.end(), Lanes{});
    }
    for (std::size_t b = 0; b < count; ++b) {
        auto& h = out[first + b];
        h.unreachable = n - 1 - h.reachable();
    }
}

}  // namespace

std::vector<DepthHistogram> all_depth_histograms(const VisibilityGraph& g, unsigned jobs) {
    std::vector<DepthHistogram> out(g.size());
    const std::size_t batches = (g.size() + kBatch - 1) / kBatch;
    parallel_for(batches, jobs, [&](std::size_t b) {
        const std::size_t first = b * kBatch;
        batch_depths(g, first, std::min(kBatch, g.size() - first), out);
    });
    return out;
}

std::vector<NodeMeasures> compute_all_measures(const FloorPlanGrid& grid, const VgaOptions& options) {
    return compute_all_measures(grid, build_visibility_graph(grid, options.corner_rule, options.jobs), options);
}

std::vector<NodeMeasures> compute_all_measures(const FloorPlanGrid& grid, const VisibilityGraph& g,
                                               const VgaOptions& options) {
    const auto hists = all_depth_histograms(g, options.jobs);
    std::vector<NodeMeasures> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& h = hists[v];
        auto& m = out[v];
        m.cell = g.cell(v);
        m.reachable = h.reachable();
        auto& r = m.record;
        r.node_count = m.reachable + 1;
        r.connectivity = connectivity(g, v);
        r.point_first_moment = point_first_moment(grid, g, v);
        r.point_second_moment = point_second_moment(grid, g, v);
        if (m.reachable > 0) {
            r.visual_mean_depth = mean_depth(h);
            r.visual_entropy = point_depth_entropy(h);
            r.relativized_entropy = relativized_entropy(h, options.relativised_sign);
        }
        if (r.node_count >= 3) {
            const auto hh = integration(r.visual_mean_depth, r.node_count, ReferenceGraphKind::DiamondHH);
            const auto p = integration(r.visual_mean_depth, r.node_count, ReferenceGraphKind::CornerGridP);
            const auto tekl = integration(r.visual_mean_depth, r.node_count, ReferenceGraphKind::BipartiteTekl);
            r.integration_hh = hh.value;
            r.integration_pvalue = p.value;
            r.integration_tekl = tekl.value;
            m.integration_saturated = hh.saturated;
        }
    }
    return out;
}

std::vector<PlanRecord> to_plan_records(const FloorPlanGrid& grid, const std::vector<NodeMeasures>& measures,
                                        const std::string& plan_name) {
    std::vector<PlanRecord> out;
    out.reserve(measures.size());
    for (std::size_t i = 0; i < measures.size(); ++i) {
        const auto& m = measures[i];
        PlanRecord rec;
        rec.ref_id = plan_name + ":" + std::to_string(i);
        rec.x = m.cell.x;
        rec.y = m.cell.y;
        const auto& label = grid.label(m.cell.x, m.cell.y);
        rec.accommodation_label = label.empty() ? std::string(kMissingLabel) : label;
        rec.accommodation_poly = rec.accommodation_label;
        rec.team_label = std::string(kMissingLabel);
        rec.team_poly = std::string(kMissingLabel);
        const auto& r = m.record;
        rec[VgaAttribute::NodeCount] = static_cast<double>(r.node_count);
        rec[VgaAttribute::Connectivity] = static_cast<double>(r.connectivity);
        rec[VgaAttribute::PointFirstMoment] = r.point_first_moment;
        rec[VgaAttribute::PointSecondMoment] = r.point_second_moment;
        rec[VgaAttribute::MeanDepth] = r.visual_mean_depth;
        rec[VgaAttribute::IntegrationTekl] = r.integration_tekl;
        rec[VgaAttribute::IntegrationHH] = r.integration_hh;
        rec[VgaAttribute::IntegrationPValue] = r.integration_pvalue;
        rec[VgaAttribute::VisualEntropy] = r.visual_entropy;
        rec[VgaAttribute::RelativisedEntropy] = r.relativized_entropy;
        rec.reachable_count = static_cast<double>(m.reachable);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace vgaml
