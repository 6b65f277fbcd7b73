#include "vgaml/study.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/integration.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace vgaml {

SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    s.count = values.size();
    if (values.empty()) return s;
    s.minimum = *std::min_element(values.begin(), values.end());
    s.maximum = *std::max_element(values.begin(), values.end());
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    if (values.size() > 1) {
        double sq = 0;
        for (double v : values) sq += (v - s.mean) * (v - s.mean);
        s.variance = sq / static_cast<double>(values.size() - 1);
        s.standard_deviation = std::sqrt(s.variance);
    }
    return s;
}

IntegrationStudy integration_study(const std::vector<PlanRecord>& records) {
    IntegrationStudy study;
    std::array<std::vector<double>, 4> columns;
    for (const auto& r : records) {
        const double k_value = r[VgaAttribute::NodeCount];
        const double md = r[VgaAttribute::MeanDepth];
        if (k_value < 4 || md < 1) continue;
        StudyRow row;
        row.node_count = static_cast<std::uint64_t>(k_value);
        row.mean_depth = md;
        const auto hh = integration(md, row.node_count, ReferenceGraphKind::DiamondHH);
        row.hh = hh.value;
        row.pvalue = integration(md, row.node_count, ReferenceGraphKind::CornerGridP).value;
        row.tekl = integration(md, row.node_count, ReferenceGraphKind::BipartiteTekl).value;
        row.saturated = hh.saturated;
        study.rows.push_back(row);
        if (row.saturated) continue;
        columns[0].push_back(row.mean_depth);
        columns[1].push_back(row.pvalue);
        columns[2].push_back(row.tekl);
        columns[3].push_back(row.hh);
    }
    for (std::size_t c = 0; c < columns.size(); ++c) study.summary.columns[c] = summarize(columns[c]);
    return study;
}

namespace {

std::string num(double v) { return csv::format_sig(v, 9); }

}  // namespace

StudyFiles render_study(const IntegrationStudy& study) {
    StudyFiles f;
    f.size_vs_depth = "node_count,mean_depth\n";
    f.integration = "mean_depth,integration_hh,integration_pvalue,integration_tekl,saturated\n";
    f.log_integration = "ln_mean_depth,ln_integration_hh,ln_integration_pvalue,ln_integration_tekl\n";
    f.reciprocal = "mean_depth,reciprocal_hh,reciprocal_pvalue,reciprocal_tekl\n";
    for (const auto& r : study.rows) {
        f.size_vs_depth += std::to_string(r.node_count) + "," + num(r.mean_depth) + "\n";
        f.integration += num(r.mean_depth) + "," + num(r.hh) + "," + num(r.pvalue) + "," + num(r.tekl) + "," +
                         (r.saturated ? "1" : "0") + "\n";
        if (!r.saturated) {
            f.log_integration += num(std::log(r.mean_depth)) + "," + num(std::log(r.hh)) + "," +
                                 num(std::log(r.pvalue)) + "," + num(std::log(r.tekl)) + "\n";
        }
        f.reciprocal += num(r.mean_depth) + "," +
                        num(reciprocal_integration(r.mean_depth, r.node_count, ReferenceGraphKind::DiamondHH)) + "," +
                        num(reciprocal_integration(r.mean_depth, r.node_count, ReferenceGraphKind::CornerGridP)) + "," +
                        num(reciprocal_integration(r.mean_depth, r.node_count, ReferenceGraphKind::BipartiteTekl)) +
                        "\n";
    }
    f.summary = "statistic";
    for (const char* c : kSummaryColumns) f.summary += std::string(",") + c;
    f.summary += "\n";
    const auto& cols = study.summary.columns;
    const std::pair<const char*, double SummaryStats::*> stats[] = {
        {"Minimum", &SummaryStats::minimum},
        {"Maximum", &SummaryStats::maximum},
        {"Mean", &SummaryStats::mean},
        {"Standard Deviation", &SummaryStats::standard_deviation},
        {"Variance", &SummaryStats::variance},
    };
    if (study.rows.empty()) return f;
    for (const auto& [name, member] : stats) {
        f.summary += name;
        for (const auto& c : cols) f.summary += "," + num(c.*member);
        f.summary += "\n";
    }
    f.summary += "Count";
    for (const auto& c : cols) f.summary += "," + std::to_string(c.count);
    f.summary += "\n";
    return f;
}

void write_study(const IntegrationStudy& study, const std::string& dir) {
    std::filesystem::create_directories(dir);
    const auto f = render_study(study);
    const std::filesystem::path d(dir);
    csv::write_file((d / "size_vs_depth.csv").string(), f.size_vs_depth);
    csv::write_file((d / "integration_vs_depth.csv").string(), f.integration);
    csv::write_file((d / "log_integration.csv").string(), f.log_integration);
    csv::write_file((d / "reciprocal_integration.csv").string(), f.reciprocal);
    csv::write_file((d / "summary.csv").string(), f.summary);
}

}  // namespace vgaml
