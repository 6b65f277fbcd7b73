#pragma once

#include "vgaml/plan_ingest.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vgaml {

/// One node's integration values, recomputed from its mean depth and node count.
struct StudyRow {
    std::uint64_t node_count = 0;
    double mean_depth = 0;
    double hh = 0;
    double pvalue = 0;
    double tekl = 0;
    /// Mean depth 1: the integration values hold the sentinel.
    bool saturated = false;
};

struct SummaryStats {
    double minimum = 0;
    double maximum = 0;
    double mean = 0;
    double standard_deviation = 0;  ///< sample (n - 1)
    double variance = 0;
    std::size_t count = 0;
};

/// Columns: mean depth, P-value, Tekl, HH.
struct StudySummary {
    std::array<SummaryStats, 4> columns{};
};

inline constexpr std::array<const char*, 4> kSummaryColumns = {
    "Mean Depth", "Integration [P-Value]", "Integration [Tekl]", "Integration [HH]"};

struct IntegrationStudy {
    std::vector<StudyRow> rows;
    StudySummary summary;
};

/// Records whose component has fewer than 4 nodes are skipped (the corner
/// grid reference is degenerate below that). Saturated rows are excluded
/// from the summary.
IntegrationStudy integration_study(const std::vector<PlanRecord>& records);

SummaryStats summarize(const std::vector<double>& values);

struct StudyFiles {
    std::string size_vs_depth;       ///< node_count, mean_depth
    std::string integration;         ///< mean_depth, hh, pvalue, tekl, saturated
    std::string log_integration;     ///< ln of the above, saturated rows omitted
    std::string reciprocal;          ///< mean_depth and 1/I for each kind
    std::string summary;             ///< min/max/mean/sd/variance table
};

StudyFiles render_study(const IntegrationStudy& study);

/// Writes the five files into `dir` (created if missing).
void write_study(const IntegrationStudy& study, const std::string& dir);

}  // namespace vgaml
