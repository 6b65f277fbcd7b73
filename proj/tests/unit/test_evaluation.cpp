#include "doctest.h"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"
#include "vgaml/evaluation.hpp"
#include "vgaml/folds.hpp"
#include "vgaml/random.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>

using namespace vgaml;

namespace {

Dataset labelled(const std::vector<UsageClass>& labels, Rng& rng) {
    Dataset ds({{"x", AttributeKind::Numeric, {}}, {"y", AttributeKind::Numeric, {}}});
    for (auto c : labels) {
        const double row[] = {static_cast<double>(class_index(c)) + rng.uniform() * 0.5, rng.uniform()};
        ds.add_row(row, c);
    }
    return ds;
}

std::vector<UsageClass> split(std::size_t a, std::size_t b) {
    std::vector<UsageClass> v(a, UsageClass::G1);
    v.insert(v.end(), b, UsageClass::G2);
    return v;
}

}  // namespace

TEST_CASE("60/40 over ten folds gives 6/4 per fold") {
    const auto labels = split(60, 40);
    const auto folds = assign_stratified_folds(labels, 10, 3);
    for (std::size_t f = 0; f < 10; ++f) {
        std::size_t a = 0, b = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (folds[i] != f) continue;
            (labels[i] == UsageClass::G1 ? a : b) += 1;
        }
        CHECK(a == 6);
        CHECK(b == 4);
    }
}

TEST_CASE("fold sizes stay balanced with small classes") {
    Rng rng(2);
    std::vector<UsageClass> labels;
    for (int i = 0; i < 97; ++i) labels.push_back(class_from_index(rng.index(7)));
    labels.push_back(UsageClass::G9);
    labels.push_back(UsageClass::G9);
    const auto folds = assign_stratified_folds(labels, 10, 8);
    std::vector<std::size_t> sizes(10, 0);
    for (auto f : folds) ++sizes[f];
    CHECK(*std::max_element(sizes.begin(), sizes.end()) - *std::min_element(sizes.begin(), sizes.end()) <= 1);
    for (auto c : kAllClasses) {
        std::vector<std::size_t> per(10, 0);
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == c) ++per[folds[i]];
        CHECK(*std::max_element(per.begin(), per.end()) - *std::min_element(per.begin(), per.end()) <= 1);
    }
    CHECK(assign_stratified_folds(labels, 10, 8) == folds);
    CHECK(assign_stratified_folds(labels, 10, 9) != folds);
}

TEST_CASE("fold plan partitions the rows") {
    Rng rng(3);
    const auto ds = labelled(split(33, 21), rng);
    const auto plan = stratified_folds(ds, 5, 1);
    std::multiset<std::size_t> seen;
    for (std::size_t f = 0; f < 5; ++f) {
        const auto test = plan.test_rows(f);
        const auto train = plan.train_rows(f);
        CHECK(test.size() + train.size() == ds.size());
        seen.insert(test.begin(), test.end());
    }
    CHECK(seen.size() == ds.size());
    CHECK(std::set<std::size_t>(seen.begin(), seen.end()).size() == ds.size());
}

TEST_CASE("confusion matrix tallies") {
    Rng rng(4);
    std::vector<std::pair<UsageClass, UsageClass>> pairs;
    ConfusionCounts tally{};
    for (int i = 0; i < 500; ++i) {
        const auto a = class_from_index(rng.index(12)), p = class_from_index(rng.index(12));
        pairs.emplace_back(a, p);
        ++tally[class_index(a)][class_index(p)];
    }
    const auto m = confusion_matrix(pairs);
    CHECK(m == tally);
    CHECK(matrix_total(m) == 500);

    std::vector<std::pair<UsageClass, UsageClass>> right, all_g1;
    for (auto [a, p] : pairs) {
        right.emplace_back(a, a);
        all_g1.emplace_back(a, UsageClass::G1);
    }
    const auto diag = confusion_matrix(right);
    CHECK(matrix_trace(diag) == 500);
    const auto col = confusion_matrix(all_g1);
    for (std::size_t r = 0; r < 12; ++r)
        for (std::size_t c = 1; c < 12; ++c) CHECK(col[r][c] == 0);
}

TEST_CASE("zeror under cross-validation stays near the majority share") {
    Rng rng(5);
    const auto ds = labelled(split(420, 280), rng);
    LearnerConfig config;
    config.kind = LearnerKind::ZeroR;
    const auto report = cross_validate(*make_learner(config), ds, stratified_folds(ds, 10, 1));
    const double p = 0.6, sigma = std::sqrt(p * (1 - p) / 700.0);
    CHECK(std::abs(report.accuracy() - p) <= 3 * sigma);
    CHECK(report.fold_accuracy.size() == 10);
}

TEST_CASE("oner reaches 100% on a perfect rule") {
    Rng rng(6);
    std::vector<UsageClass> labels;
    for (int i = 0; i < 300; ++i) labels.push_back(class_from_index(rng.index(3)));
    const auto ds = labelled(labels, rng);
    LearnerConfig config;
    config.kind = LearnerKind::OneR;
    const auto report = cross_validate(*make_learner(config), ds, stratified_folds(ds, 10, 1), 4);
    CHECK(report.accuracy() == 1.0);
    CHECK(matrix_trace(report.matrix) == matrix_total(report.matrix));
}

TEST_CASE("cross-validation does not depend on the job count") {
    Rng rng(7);
    std::vector<UsageClass> labels;
    for (int i = 0; i < 400; ++i) labels.push_back(class_from_index(rng.index(4)));
    const auto ds = labelled(labels, rng);
    LearnerConfig config;
    config.tree.min_leaf = 5;
    config.pruning.kind = PruningKind::ErrorBased;
    const auto plan = stratified_folds(ds, 10, 2);
    const auto one = cross_validate(*make_learner(config), ds, plan, 1);
    const auto many = cross_validate(*make_learner(config), ds, plan, 8);
    CHECK(one.matrix == many.matrix);
    CHECK(one.fold_accuracy == many.fold_accuracy);
    CHECK(render_summary_csv(one) == render_summary_csv(many));
    CHECK(one.model.tree_size.has_value());
    // Row sums are the class counts.
    const auto counts = ds.class_counts();
    for (std::size_t r = 0; r < 12; ++r) {
        std::uint64_t sum = 0;
        for (auto v : one.matrix[r]) sum += v;
        CHECK(sum == counts[r]);
    }
}

TEST_CASE("accuracy formatting") {
    CHECK(format_accuracy(0.794654) == "79.4654 %");
    CHECK(format_accuracy(1.0) == "100.0000 %");
    CHECK(format_accuracy(0.3692) == "36.9200 %");
}

TEST_CASE("confusion csv layout and round-trip") {
    ConfusionCounts m{};
    m[0][0] = 5;
    m[0][9] = 2;
    m[11][3] = 1;
    const auto text = render_confusion_csv(m);
    const auto rows = csv::parse(text);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0].size() == 13);
    CHECK(rows[0][0].empty());
    for (std::size_t c = 0; c < 12; ++c) {
        CHECK(rows[0][c + 1] == class_code(kAllClasses[c]));
        CHECK(rows[c + 1][0] == class_code(kAllClasses[c]));
        CHECK(rows[c + 1].size() == 13);
    }
    CHECK(rows[1][10] == "2");
    CHECK(rows[5][5] == "0");
    CHECK(parse_confusion_csv(text) == m);
    CHECK_THROWS_AS(parse_confusion_csv(",G1\nG1,3\n"), SchemaError);
}

TEST_CASE("heatmap normalizes rows") {
    ConfusionCounts m{};
    m[0][0] = 4;
    m[2][2] = 7;
    const auto rows = csv::parse(render_heatmap_csv(m));
    double v = 0;
    REQUIRE(csv::parse_double(rows[1][1], v));
    CHECK(v == 1.0);
    REQUIRE(csv::parse_double(rows[2][1], v));
    CHECK(v == 0.0);
    for (const auto& r : rows)
        for (const auto& f : r) CHECK(f.find("nan") == std::string::npos);
}

TEST_CASE("report export is byte-identical across runs") {
    Rng rng(8);
    std::vector<UsageClass> labels;
    for (int i = 0; i < 200; ++i) labels.push_back(class_from_index(rng.index(3)));
    const auto ds = labelled(labels, rng);
    LearnerConfig config;
    config.kind = LearnerKind::NaiveBayes;
    const auto plan = stratified_folds(ds, 10, 5);
    const std::string a = std::string(VGAML_TEST_TMP) + "/report_a", b = std::string(VGAML_TEST_TMP) + "/report_b";
    export_report(cross_validate(*make_learner(config), ds, plan), a);
    export_report(cross_validate(*make_learner(config), ds, plan), b);
    for (const char* name : {"summary.csv", "confusion.csv", "heatmap.csv"}) {
        CHECK(csv::read_file(a + "/" + name) == csv::read_file(b + "/" + name));
    }
    const auto summary = csv::parse(csv::read_file(a + "/summary.csv"));
    CHECK(summary[0] == csv::Row{"field", "value"});
}
