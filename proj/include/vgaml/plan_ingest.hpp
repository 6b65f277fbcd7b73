#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgaml {

/// The ten visibility-graph attributes carried by every plan record, in
/// column order.
enum class VgaAttribute : std::size_t {
    NodeCount,
    Connectivity,
    PointFirstMoment,
    PointSecondMoment,
    MeanDepth,
    IntegrationTekl,
    IntegrationHH,
    IntegrationPValue,
    VisualEntropy,
    RelativisedEntropy,
};

inline constexpr std::size_t kNumVgaAttributes = 10;

std::string_view attribute_name(VgaAttribute a);
std::optional<VgaAttribute> attribute_from_name(std::string_view name);

/// Layout-specific columns, followed by the ten attribute columns.
inline constexpr std::array<std::string_view, 7> kLayoutColumns = {
    "Ref", "X", "Y", "Accommodation", "Accommodation Poly ID", "Team", "Team Poly ID",
};
inline constexpr std::size_t kPlanColumnCount = kLayoutColumns.size() + kNumVgaAttributes;

/// Optional trailing column written by the VGA stage: number of other cells
/// reachable from the cell through the visibility graph.
inline constexpr std::string_view kReachableColumn = "Reachable Count";

/// The 17 required column names in canonical order.
std::array<std::string_view, kPlanColumnCount> plan_columns();

/// One grid cell of one plan.
struct PlanRecord {
    std::string ref_id;
    double x = 0;
    double y = 0;
    std::string accommodation_label;
    std::string accommodation_poly;
    std::string team_label;
    std::string team_poly;
    std::array<double, kNumVgaAttributes> attributes{};
    std::optional<double> reachable_count;

    double& operator[](VgaAttribute a) { return attributes[static_cast<std::size_t>(a)]; }
    double operator[](VgaAttribute a) const { return attributes[static_cast<std::size_t>(a)]; }

    friend bool operator==(const PlanRecord&, const PlanRecord&) = default;
};

/// Parses a plan CSV: header row naming all 17 columns (any order, plus the
/// optional reachable-count column), then one record per row.
/// Throws SchemaError on missing/unknown/duplicate columns, row width
/// mismatches, non-numeric or missing numeric values, and duplicate (x, y).
std::vector<PlanRecord> parse_plan_csv(std::string_view text);

/// Writes records with the canonical header. Numbers are written with 9
/// significant digits. The reachable-count column is emitted when every
/// record carries it.
std::string write_plan_csv(const std::vector<PlanRecord>& records);

}  // namespace vgaml
