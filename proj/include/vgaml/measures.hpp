#pragma once

#include "vgaml/grid.hpp"
#include "vgaml/plan_ingest.hpp"
#include "vgaml/visibility.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vgaml {

/// Visual depths from one node: counts[d] is the number of nodes first
/// reached after d visibility steps (counts[0] is always 0).
struct DepthHistogram {
    std::vector<std::uint64_t> counts{0};
    /// Nodes of the graph not reachable from the source.
    std::uint64_t unreachable = 0;

    std::uint64_t reachable() const;
    std::uint64_t total_depth() const;
    std::size_t max_depth() const { return counts.size() - 1; }
    double frequency(std::size_t d) const;

    friend bool operator==(const DepthHistogram&, const DepthHistogram&) = default;
};

/// Sign convention for relativised entropy.
enum class RelativisedSign {
    Printed,     ///< sum of -p_d ln(p_d / q_d); zero or negative when q is a proper pmf
    Divergence,  ///< sum of p_d ln(p_d / q_d), the Kullback-Leibler form
};

/// Sequential breadth-first search over visibility adjacency.
DepthHistogram visual_depths(const VisibilityGraph& g, std::size_t node);

/// Total depth over the number of reachable nodes, in steps. Throws
/// NumericError when nothing is reachable.
double mean_depth(const DepthHistogram& h);

std::size_t connectivity(const VisibilityGraph& g, std::size_t node);

/// Sum of centre-to-centre distances to directly visible cells, in metres.
double point_first_moment(const FloorPlanGrid& grid, const VisibilityGraph& g, std::size_t node);

/// Sum of squared centre-to-centre distances to directly visible cells, m^2.
double point_second_moment(const FloorPlanGrid& grid, const VisibilityGraph& g, std::size_t node);

/// Shannon entropy (natural log) of the depth frequencies. 0 when nothing is reachable.
double point_depth_entropy(const DepthHistogram& h);

/// Depth frequencies against a Poisson expectation q_d = L^d e^-L / d! with L
/// the node's mean depth. 0 when nothing is reachable.
double relativized_entropy(const DepthHistogram& h, RelativisedSign sign = RelativisedSign::Printed);

struct MeasureRecord {
    /// Size of the node's connected component of the visibility graph.
    std::uint64_t node_count = 0;
    std::uint64_t connectivity = 0;
    double point_first_moment = 0;
    double point_second_moment = 0;
    /// 0 for a node with nothing reachable.
    double visual_mean_depth = 0;
    double integration_tekl = 0;
    double integration_hh = 0;
    double integration_pvalue = 0;
    double visual_entropy = 0;
    double relativized_entropy = 0;

    friend bool operator==(const MeasureRecord&, const MeasureRecord&) = default;
};

struct NodeMeasures {
    Cell cell;
    MeasureRecord record;
    /// Number of other nodes reachable (node_count - 1).
    std::uint64_t reachable = 0;
    /// Integration columns hold the saturation sentinel (mean depth 1).
    bool integration_saturated = false;
};

struct VgaOptions {
    CornerRule corner_rule = kDefaultCornerRule;
    RelativisedSign relativised_sign = RelativisedSign::Printed;
    unsigned jobs = 1;
};

/// Depth histograms of every node, computed with bit-parallel multi-source
/// BFS. Identical to calling visual_depths for each node.
std::vector<DepthHistogram> all_depth_histograms(const VisibilityGraph& g, unsigned jobs = 1);

/// Every measure for every open cell, ordered by (y, x). Integration
/// columns use the node's component size as k; components of fewer than 3
/// nodes get 0.
std::vector<NodeMeasures> compute_all_measures(const FloorPlanGrid& grid, const VgaOptions& options = {});

/// Same, on a prebuilt graph.
std::vector<NodeMeasures> compute_all_measures(const FloorPlanGrid& grid, const VisibilityGraph& g,
                                               const VgaOptions& options = {});

/// Plan records for the measures CSV: ref "<plan>:<node>", cell coordinates,
/// the cell label (or "?" when unlabelled) and the reachable count.
std::vector<PlanRecord> to_plan_records(const FloorPlanGrid& grid, const std::vector<NodeMeasures>& measures,
                                        const std::string& plan_name);

}  // namespace vgaml
