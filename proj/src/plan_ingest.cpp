#include "vgaml/plan_ingest.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace vgaml {
namespace {

constexpr std::array<std::string_view, kNumVgaAttributes> kAttributeNames = {
    "Visual Node Count",
    "Connectivity",
    "Point First Moment",
    "Point Second Moment",
    "Visual Mean Depth",
    "Visual Integration [Tekl]",
    "Visual Integration [HH]",
    "Visual Integration [P-value]",
    "Visual Entropy",
    "Visual Relativised Entropy",
};

constexpr int kDigits = 9;

double parse_numeric(const std::string& text, std::size_t row, std::string_view column) {
    double v = 0;
    if (!csv::parse_double(text, v) || !std::isfinite(v)) {
        throw SchemaError("row " + std::to_string(row) + ", column '" + std::string(column) +
                          "': non-numeric value '" + text + "'");
    }
    return v;
}

}  // namespace

std::string_view attribute_name(VgaAttribute a) { return kAttributeNames[static_cast<std::size_t>(a)]; }

std::optional<VgaAttribute> attribute_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNumVgaAttributes; ++i) {
        if (kAttributeNames[i] == name) return static_cast<VgaAttribute>(i);
    }
    return std::nullopt;
}

std::array<std::string_view, kPlanColumnCount> plan_columns() {
    std::array<std::string_view, kPlanColumnCount> cols{};
    std::copy(kLayoutColumns.begin(), kLayoutColumns.end(), cols.begin());
    std::copy(kAttributeNames.begin(), kAttributeNames.end(), cols.begin() + kLayoutColumns.size());
    return cols;
}

std::vector<PlanRecord> parse_plan_csv(std::string_view text) {
    const auto rows = csv::parse(text);
    if (rows.empty()) throw SchemaError("plan csv: missing header row");

    // field slot for each header position; kPlanColumnCount marks the reachable column
    const auto required = plan_columns();
    const auto& header = rows.front();
    std::vector<std::size_t> slot(header.size());
    std::set<std::size_t> seen;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const auto it = std::find(required.begin(), required.end(), header[c]);
        std::size_t s;
        if (it != required.end()) {
            s = static_cast<std::size_t>(it - required.begin());
        } else if (header[c] == kReachableColumn) {
            s = kPlanColumnCount;
        } else {
            throw SchemaError("plan csv: unknown column '" + header[c] + "'");
        }
        if (!seen.insert(s).second) throw SchemaError("plan csv: duplicate column '" + header[c] + "'");
        slot[c] = s;
    }
    for (std::size_t s = 0; s < kPlanColumnCount; ++s) {
        if (!seen.contains(s)) {
            throw SchemaError("plan csv: missing column '" + std::string(required[s]) + "'");
        }
    }

    std::vector<PlanRecord> records;
    records.reserve(rows.size() - 1);
    std::set<std::pair<double, double>> positions;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            std::string detail = row.size() < header.size()
                                     ? "; missing '" + header[row.size()] + "'"
                                     : "";
            throw SchemaError("row " + std::to_string(r) + ": expected " + std::to_string(header.size()) +
                              " columns, got " + std::to_string(row.size()) + detail);
        }
        PlanRecord rec;
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::size_t s = slot[c];
            const auto& v = row[c];
            switch (s) {
                case 0: rec.ref_id = v; break;
                case 1: rec.x = parse_numeric(v, r, header[c]); break;
                case 2: rec.y = parse_numeric(v, r, header[c]); break;
                case 3: rec.accommodation_label = v; break;
                case 4: rec.accommodation_poly = v; break;
                case 5: rec.team_label = v; break;
                case 6: rec.team_poly = v; break;
                case kPlanColumnCount: rec.reachable_count = parse_numeric(v, r, header[c]); break;
                default:
                    rec.attributes[s - kLayoutColumns.size()] = parse_numeric(v, r, header[c]);
            }
        }
        if (!positions.emplace(rec.x, rec.y).second) {
            throw SchemaError("row " + std::to_string(r) + ": duplicate position (" + csv::format_exact(rec.x) +
                              ", " + csv::format_exact(rec.y) + ")");
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::string write_plan_csv(const std::vector<PlanRecord>& records) {
    const bool with_reachable =
        !records.empty() && std::all_of(records.begin(), records.end(),
                                        [](const PlanRecord& r) { return r.reachable_count.has_value(); });
    csv::Row header;
    for (auto name : plan_columns()) header.emplace_back(name);
    if (with_reachable) header.emplace_back(kReachableColumn);

    std::string out = csv::join(header) + "\n";
    for (const auto& rec : records) {
        csv::Row row = {rec.ref_id,
                        csv::format_sig(rec.x, kDigits),
                        csv::format_sig(rec.y, kDigits),
                        rec.accommodation_label,
                        rec.accommodation_poly,
                        rec.team_label,
                        rec.team_poly};
        for (double v : rec.attributes) row.push_back(csv::format_sig(v, kDigits));
        if (with_reachable) row.push_back(csv::format_sig(*rec.reachable_count, kDigits));
        out += csv::join(row) + "\n";
    }
    return out;
}

}  // namespace vgaml
