#include "doctest.h"
#include "oracles.hpp"

#include "vgaml/errors.hpp"
#include "vgaml/integration.hpp"
#include "vgaml/parallel.hpp"
#include "vgaml/reference_graph.hpp"
#include "vgaml/study.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

using namespace vgaml;

namespace {

double bfs_mean_depth(const ReferenceGraph& g, std::size_t source) {
    const auto d = oracle::bfs_lists(g.adjacency, source);
    double total = 0;
    for (int x : d) {
        REQUIRE(x >= 0);
        total += x;
    }
    return total / static_cast<double>(g.size() - 1);
}

double oracle_reference_md(ReferenceGraphKind kind, std::uint64_t k) {
    const auto g = build_reference_graph(kind, k);
    if (kind != ReferenceGraphKind::BipartiteTekl) return bfs_mean_depth(g, 0);
    double sum = 0;
    for (std::size_t v = 0; v < g.size(); ++v) sum += bfs_mean_depth(g, v);
    return sum / static_cast<double>(g.size());
}

PlanRecord record(double k, double md) {
    PlanRecord r;
    r[VgaAttribute::NodeCount] = k;
    r[VgaAttribute::MeanDepth] = md;
    return r;
}

}  // namespace

TEST_CASE("small reference graphs") {
    CHECK(diamond_levels(4) == std::vector<std::uint64_t>{1, 2, 1});
    CHECK(oracle_reference_md(ReferenceGraphKind::DiamondHH, 4) == doctest::Approx(4.0 / 3.0));
    CHECK(reference_mean_depth(ReferenceGraphKind::DiamondHH, 4) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(oracle_reference_md(ReferenceGraphKind::CornerGridP, 4) == doctest::Approx(4.0 / 3.0));
    CHECK(reference_mean_depth(ReferenceGraphKind::CornerGridP, 4) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    CHECK(oracle_reference_md(ReferenceGraphKind::BipartiteTekl, 5) == doctest::Approx(1.4));
    CHECK(reference_mean_depth(ReferenceGraphKind::BipartiteTekl, 5) == doctest::Approx(1.4).epsilon(1e-12));
    for (auto kind : kAllReferenceKinds) CHECK(reference_mean_depth(kind, 2) == 1.0);
}

TEST_CASE("reference graphs are connected, simple and sized k") {
    for (auto kind : kAllReferenceKinds) {
        for (std::uint64_t k = 2; k <= 80; ++k) {
            const auto g = build_reference_graph(kind, k);
            REQUIRE(g.size() == k);
            for (std::size_t v = 0; v < k; ++v) {
                for (auto u : g.adjacency[v]) {
                    CHECK(u != v);
                    const auto& back = g.adjacency[u];
                    CHECK(std::count(back.begin(), back.end(), v) == 1);
                }
            }
            const auto d = oracle::bfs_lists(g.adjacency, 0);
            CHECK(std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; }));
            CHECK(reference_mean_depth(kind, k) == doctest::Approx(oracle_reference_md(kind, k)).epsilon(1e-12));
        }
    }
}

TEST_CASE("diamond BFS levels follow the level widths") {
    for (std::uint64_t k = 2; k <= 120; ++k) {
        const auto levels = diamond_levels(k);
        CHECK(std::accumulate(levels.begin(), levels.end(), std::uint64_t{0}) == k);
        CHECK(levels.front() == 1);
        for (auto w : levels) CHECK(w > 0);
        const auto g = build_reference_graph(ReferenceGraphKind::DiamondHH, k);
        const auto d = oracle::bfs_lists(g.adjacency, 0);
        std::vector<std::uint64_t> seen(levels.size(), 0);
        for (int x : d) {
            REQUIRE(x < static_cast<int>(seen.size()));
            ++seen[x];
        }
        CHECK(seen == levels);
    }
}

TEST_CASE("bipartite reference is the balanced complete bipartite graph") {
    const auto g = build_reference_graph(ReferenceGraphKind::BipartiteTekl, 7);
    std::vector<std::size_t> degrees;
    for (const auto& n : g.adjacency) degrees.push_back(n.size());
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<std::size_t>{3, 3, 3, 3, 4, 4, 4});
}

TEST_CASE("corner grid reference is monotone in k") {
    double prev = 1.0;
    for (std::uint64_t k = 4; k <= 400; ++k) {
        const double md = oracle_reference_md(ReferenceGraphKind::CornerGridP, k);
        CHECK(md >= prev - 1e-12);
        CHECK(reference_mean_depth(ReferenceGraphKind::CornerGridP, k) == doctest::Approx(md).epsilon(1e-12));
        prev = md;
    }
}

TEST_CASE("reference graphs reject k below 2") {
    for (auto kind : kAllReferenceKinds) {
        CHECK_THROWS_AS(build_reference_graph(kind, 1), NumericError);
        CHECK_THROWS_AS(build_reference_graph(kind, 0), NumericError);
    }
}

TEST_CASE("reference kind names parse") {
    CHECK(parse_reference_kind("HH") == ReferenceGraphKind::DiamondHH);
    CHECK(parse_reference_kind("pvalue") == ReferenceGraphKind::CornerGridP);
    CHECK(parse_reference_kind("Tekl") == ReferenceGraphKind::BipartiteTekl);
    CHECK_THROWS(parse_reference_kind("ring"));
}

TEST_CASE("memoized reference depths are stable under concurrency") {
    std::vector<double> out(64);
    parallel_for(out.size(), 8, [&](std::size_t i) {
        out[i] = reference_mean_depth(kAllReferenceKinds[i % 3], 100 + i / 3);
    });
    for (std::size_t i = 0; i < out.size(); ++i) {
        const auto kind = kAllReferenceKinds[i % 3];
        CHECK(out[i] == reference_mean_depth(kind, 100 + i / 3));
        CHECK(out[i] == doctest::Approx(oracle_reference_md(kind, 100 + i / 3)).epsilon(1e-12));
    }
}

TEST_CASE("integration identities") {
    for (auto kind : kAllReferenceKinds) {
        const double ref = reference_mean_depth(kind, 40);
        CHECK(integration(ref, 40, kind).value == doctest::Approx(1.0).epsilon(1e-12));
        const auto sat = integration(1.0, 40, kind);
        CHECK(sat.saturated);
        CHECK(sat.value == kIntegrationSentinel);
        CHECK(reciprocal_integration(1.0, 40, kind) == 0.0);
    }
    CHECK_THROWS_AS(integration(1.5, 2, ReferenceGraphKind::DiamondHH), NumericError);
    CHECK_THROWS_AS(integration(0.5, 10, ReferenceGraphKind::DiamondHH), NumericError);
    CHECK(relative_asymmetry(2.0, 6) == doctest::Approx(0.5));
}

TEST_CASE("plus-shape arm integration against the diamond") {
    const double ref = oracle_reference_md(ReferenceGraphKind::DiamondHH, 5);
    const auto v = integration(1.5, 5, ReferenceGraphKind::DiamondHH);
    CHECK_FALSE(v.saturated);
    CHECK(v.value == doctest::Approx((ref - 1.0) / 0.5).epsilon(1e-12));
}

TEST_CASE("reciprocal integration is affine in mean depth") {
    for (auto kind : kAllReferenceKinds) {
        for (std::uint64_t k : {5u, 17u, 64u, 199u}) {
            const double a = reciprocal_integration(1.5, k, kind);
            const double b = reciprocal_integration(2.5, k, kind);
            const double slope = b - a;
            for (double md = 1.0; md < 8.0; md += 0.37) {
                const double r = reciprocal_integration(md, k, kind);
                CHECK(r == doctest::Approx(a + slope * (md - 1.5)).epsilon(1e-12));
                if (md > 1.0) CHECK(1.0 / integration(md, k, kind).value == doctest::Approx(r).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("summary uses the sample standard deviation") {
    const auto s = summarize({1, 2, 3, 4});
    CHECK(s.minimum == 1);
    CHECK(s.maximum == 4);
    CHECK(s.mean == 2.5);
    CHECK(s.variance == doctest::Approx(5.0 / 3.0));
    CHECK(s.standard_deviation == doctest::Approx(std::sqrt(5.0 / 3.0)));
    CHECK(s.count == 4);
    const auto empty = summarize({});
    CHECK(empty.count == 0);
}

TEST_CASE("study skips tiny components and excludes saturated rows from the summary") {
    const std::vector<PlanRecord> records = {record(3, 1.5), record(10, 1.0), record(10, 1.8), record(20, 2.4)};
    const auto study = integration_study(records);
    REQUIRE(study.rows.size() == 3);
    CHECK(study.rows[0].saturated);
    CHECK(study.summary.columns[0].count == 2);
    CHECK(study.summary.columns[0].mean == doctest::Approx(2.1));
    const auto& row = study.rows[2];
    CHECK(row.tekl == doctest::Approx(integration(2.4, 20, ReferenceGraphKind::BipartiteTekl).value));
    CHECK(row.hh == doctest::Approx(integration(2.4, 20, ReferenceGraphKind::DiamondHH).value));
    CHECK(row.pvalue == doctest::Approx(integration(2.4, 20, ReferenceGraphKind::CornerGridP).value));
}

TEST_CASE("empty study renders headers only") {
    const auto files = render_study(integration_study({}));
    for (const auto* text : {&files.size_vs_depth, &files.integration, &files.log_integration, &files.reciprocal,
                             &files.summary}) {
        CHECK(std::count(text->begin(), text->end(), '\n') == 1);
    }
}

TEST_CASE("study files are written to a directory") {
    const std::string dir = std::string(VGAML_TEST_TMP) + "/study";
    std::filesystem::remove_all(dir);
    write_study(integration_study({record(10, 1.8), record(20, 2.4)}), dir);
    for (const char* name : {"size_vs_depth.csv", "integration_vs_depth.csv", "log_integration.csv",
                             "reciprocal_integration.csv", "summary.csv"}) {
        CHECK(std::filesystem::exists(std::filesystem::path(dir) / name));
    }
    std::ifstream in(std::filesystem::path(dir) / "summary.csv");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().rfind("statistic,Mean Depth,Integration [P-Value],Integration [Tekl],Integration [HH]\n", 0) == 0);
}
