#include "doctest.h"

#include "vgaml/csv.hpp"
#include "vgaml/dataset.hpp"
#include "vgaml/errors.hpp"
#include "vgaml/grid.hpp"
#include "vgaml/label_map.hpp"
#include "vgaml/plan_ingest.hpp"
#include "vgaml/usage_class.hpp"

#include <algorithm>
#include <cmath>
#include <string>

using namespace vgaml;

namespace {

std::string header() {
    std::string h;
    for (auto c : plan_columns()) {
        if (!h.empty()) h += ",";
        h += c;
    }
    return h + "\n";
}

std::string row(int x, int y, const std::string& label, double base = 1.0) {
    std::string r = "p:" + std::to_string(x) + "_" + std::to_string(y) + "," + std::to_string(x) + "," +
                    std::to_string(y) + "," + label + ",poly1,?,?";
    for (std::size_t a = 0; a < kNumVgaAttributes; ++a) r += "," + csv::format_exact(base + static_cast<double>(a));
    return r + "\n";
}

std::vector<PlanRecord> sample_records() {
    return parse_plan_csv(header() + row(0, 0, "WRKSP-OPN", 1) + row(1, 0, "CIRC-PRI", 2) + row(2, 0, "?", 3) +
                          row(0, 1, "MTG-BKB", 4));
}

}  // namespace

TEST_CASE("csv splitting handles quotes and line endings") {
    const auto rows = csv::parse("\xEF\xBB\xBF" "a,\"b,c\",\"d\"\"e\"\r\n\n1,2,\"x\ny\"\n");
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == csv::Row{"a", "b,c", "d\"e"});
    CHECK(rows[1] == csv::Row{"1", "2", "x\ny"});
    CHECK(csv::escape("plain") == "plain");
    CHECK(csv::escape("a,b") == "\"a,b\"");
    CHECK(csv::escape("q\"") == "\"q\"\"\"");
}

TEST_CASE("number formatting round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456789.125, -2.5}) {
        double back = 0;
        REQUIRE(csv::parse_double(csv::format_exact(v), back));
        CHECK(back == v);
    }
    CHECK(csv::format_sig(1.0 / 3.0, 4) == "0.3333");
    double out = 0;
    CHECK_FALSE(csv::parse_double("1.5x", out));
    CHECK_FALSE(csv::parse_double("", out));
}

TEST_CASE("usage classes have a fixed order and names") {
    CHECK(kAllClasses.size() == 12);
    CHECK(class_code(UsageClass::G1) == "G1");
    CHECK(class_code(UsageClass::Exclude) == "EXCLUDE");
    CHECK(class_rule_name(UsageClass::G10) == "G10:Primary_Circulation");
    CHECK(class_display_name(UsageClass::G11) == "Secondary Circulation");
    for (auto c : kAllClasses) {
        CHECK(parse_class(class_code(c)) == c);
        CHECK(parse_class(class_rule_name(c)) == c);
    }
    CHECK_FALSE(parse_class("G12").has_value());
    ClassCounts tie{};
    tie[3] = 5;
    tie[1] = 5;
    CHECK(majority_index(tie) == 1);
}

TEST_CASE("label grouping") {
    CHECK(group_label("WRKSP-OPN") == UsageClass::G1);
    CHECK(group_label("?") == UsageClass::G11);
    CHECK(group_label("OTHFCL-STO-LOW") == UsageClass::Exclude);
    CHECK(group_label("CIRC-PRI") == UsageClass::G10);
    CHECK_THROWS_AS(group_label("wrksp-opn"), SchemaError);
    CHECK_THROWS_AS(group_label("NO-SUCH-LABEL"), SchemaError);
}

TEST_CASE("bundled label map file matches the built-in table") {
    const auto text = csv::read_file(std::string(VGAML_DATA_DIR) + "/labelmap.csv");
    const auto file = LabelMap::from_csv(text);
    CHECK(file == LabelMap::builtin());
    CHECK(LabelMap::from_csv(LabelMap::builtin().to_csv()) == LabelMap::builtin());
}

TEST_CASE("label map csv errors") {
    CHECK_THROWS_AS(LabelMap::from_csv("raw_label,class\nA,G99\n"), SchemaError);
    const auto m = LabelMap::from_csv("raw_label,class\nA,G3\n");
    CHECK(m.group("A") == UsageClass::G3);
    CHECK_FALSE(m.contains("B"));
}

TEST_CASE("plan csv with one row") {
    const auto records = parse_plan_csv(header() + row(3, 4, "WRKSP-OPN"));
    REQUIRE(records.size() == 1);
    CHECK(records[0].x == 3);
    CHECK(records[0].y == 4);
    CHECK(records[0].accommodation_label == "WRKSP-OPN");
    CHECK(records[0][VgaAttribute::NodeCount] == 1.0);
    CHECK(records[0][VgaAttribute::RelativisedEntropy] == 10.0);
    CHECK_FALSE(records[0].reachable_count.has_value());
}

TEST_CASE("plan csv with empty body") { CHECK(parse_plan_csv(header()).empty()); }

TEST_CASE("plan csv missing a column names it") {
    std::string h;
    for (auto c : plan_columns()) {
        if (c == "Connectivity") continue;
        if (!h.empty()) h += ",";
        h += c;
    }
    try {
        parse_plan_csv(h + "\n");
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("Connectivity") != std::string::npos);
    }
}

TEST_CASE("plan csv rejects bad rows") {
    CHECK_THROWS_AS(parse_plan_csv(header() + "a,1,2\n"), SchemaError);
    auto bad = row(0, 0, "WRKSP-OPN");
    bad.replace(bad.rfind(','), std::string::npos, ",abc\n");
    try {
        parse_plan_csv(header() + row(1, 1, "X") + bad);
        FAIL("expected a schema error");
    } catch (const SchemaError& e) {
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_plan_csv(header() + row(0, 0, "A") + row(0, 0, "B")), SchemaError);
    CHECK_THROWS_AS(parse_plan_csv(header() + row(0, 0, "A", NAN)), SchemaError);
    CHECK_THROWS_AS(parse_plan_csv("Ref,Bogus\n"), SchemaError);
    CHECK_THROWS_AS(parse_plan_csv(""), SchemaError);
}

TEST_CASE("plan csv columns may come in any order") {
    const auto original = sample_records();
    auto cols = plan_columns();
    std::string h;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) {
        if (!h.empty()) h += ",";
        h += *it;
    }
    // Reverse each data row as well.
    const auto rows = csv::parse(write_plan_csv(original));
    std::string text = h + "\n";
    for (std::size_t r = 1; r < rows.size(); ++r) {
        auto fields = rows[r];
        std::reverse(fields.begin(), fields.end());
        text += csv::join(fields) + "\n";
    }
    CHECK(parse_plan_csv(text) == original);
}

TEST_CASE("plan csv round-trip") {
    const auto records = sample_records();
    const auto text = write_plan_csv(records);
    CHECK(parse_plan_csv(text) == records);
    CHECK(write_plan_csv(parse_plan_csv(text)) == text);
}

TEST_CASE("reachable count column is optional") {
    auto records = sample_records();
    for (auto& r : records) r.reachable_count = 3;
    const auto text = write_plan_csv(records);
    CHECK(text.find(std::string(kReachableColumn)) != std::string::npos);
    CHECK(parse_plan_csv(text) == records);
}

TEST_CASE("attribute names") {
    for (std::size_t a = 0; a < kNumVgaAttributes; ++a) {
        const auto attr = static_cast<VgaAttribute>(a);
        CHECK(attribute_from_name(attribute_name(attr)) == attr);
    }
    CHECK_FALSE(attribute_from_name("Height").has_value());
}

TEST_CASE("grid text format") {
    const std::string text = "4 2 0.5\n#ab.\n..#b\n";
    const auto grid = parse_grid(text, "code,label\na,WRKSP-OPN\nb,CIRC-PRI\n");
    CHECK(grid.width() == 4);
    CHECK(grid.height() == 2);
    CHECK(grid.cell_size() == 0.5);
    CHECK_FALSE(grid.is_open(0, 0));
    CHECK(grid.label(1, 0) == "WRKSP-OPN");
    CHECK(grid.label(3, 1) == "CIRC-PRI");
    CHECK(grid.label(0, 1).empty());
    CHECK(grid.open_count() == 6);
    const auto [g2, legend] = write_grid(grid);
    CHECK(parse_grid(g2, legend) == grid);
}

TEST_CASE("grid parse errors") {
    CHECK_THROWS_AS(parse_grid(""), ParseError);
    CHECK_THROWS_AS(parse_grid("2 2 0.45\n..\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("2 1 0.45\n...\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("2 1 0.45\n.a\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("x y z\n"), ParseError);
    CHECK_THROWS_AS(parse_grid("2 1 0.45\n##\n"), InfeasibleError);
}

TEST_CASE("grid construction contracts") {
    CHECK_THROWS_AS(FloorPlanGrid(2, 1, 0.45, {0, 0}), InfeasibleError);
    CHECK_THROWS_AS(FloorPlanGrid(2, 1, 0.45, {1, 0}, {"", "X"}), SchemaError);
    CHECK_THROWS_AS(FloorPlanGrid(2, 2, 0.45, {1, 0}), SchemaError);
    const FloorPlanGrid g(2, 1, 0.45, {1, 1}, {"A", ""});
    const auto b = g.with_blocked(0, 0);
    CHECK_FALSE(b.is_open(0, 0));
    CHECK(b.label(0, 0).empty());
}

TEST_CASE("dataset from plan records") {
    const auto records = sample_records();
    const auto ds = dataset_from_records(records, LabelMap::builtin());
    CHECK(ds.size() == 4);
    CHECK(ds.num_attributes() == 16);
    CHECK(ds.label(0) == UsageClass::G1);
    CHECK(ds.label(1) == UsageClass::G10);
    CHECK(ds.label(2) == UsageClass::G11);
    CHECK(ds.label(3) == UsageClass::G3);
    CHECK(ds.schema()[ds.attribute_index("Ref")].kind == AttributeKind::Nominal);
    CHECK_THROWS_AS(ds.attribute_index("Accommodation"), SchemaError);

    auto bad = records;
    bad[0].accommodation_label = "NOT-A-LABEL";
    CHECK_THROWS_AS(dataset_from_records(bad, LabelMap::builtin()), SchemaError);
}

TEST_CASE("attribute presets") {
    const auto ds = dataset_from_records(sample_records(), LabelMap::builtin());
    const auto full = select_attributes(ds, AttributePreset::Full10);
    REQUIRE(full.num_attributes() == 10);
    for (std::size_t a = 0; a < 10; ++a)
        CHECK(full.schema()[a].name == attribute_name(static_cast<VgaAttribute>(a)));
    CHECK(full.labels() == ds.labels());
    const auto sub = select_attributes(full, AttributePreset::Subset8);
    CHECK(sub.num_attributes() == 8);
    CHECK_NOTHROW(sub.attribute_index(attribute_name(VgaAttribute::IntegrationTekl)));
    CHECK_THROWS_AS(sub.attribute_index(attribute_name(VgaAttribute::IntegrationHH)), SchemaError);
    CHECK_THROWS_AS(sub.attribute_index(attribute_name(VgaAttribute::IntegrationPValue)), SchemaError);
    CHECK_THROWS_AS(select_attributes(full, AttributePreset::Explicit, {}), SchemaError);
    const std::vector<std::string> names = {"Connectivity", "Visual Mean Depth"};
    const auto two = select_attributes(full, AttributePreset::Explicit, names);
    CHECK(two.num_attributes() == 2);
    CHECK(two.value(1, 0) == full.value(1, 1));
    const std::vector<std::string> unknown = {"Nope"};
    CHECK_THROWS_AS(select_attributes(full, AttributePreset::Explicit, unknown), SchemaError);
    CHECK_THROWS_AS(select_attributes(full, AttributePreset::Pca), SchemaError);
    CHECK(parse_preset("subset8") == AttributePreset::Subset8);
    CHECK_THROWS_AS(parse_preset("all"), SchemaError);
}

TEST_CASE("dataset csv round-trip and concatenation") {
    const auto full = select_attributes(dataset_from_records(sample_records(), LabelMap::builtin()),
                                        AttributePreset::Full10);
    const auto text = write_dataset_csv(full);
    const auto back = read_dataset_csv(text);
    CHECK(back.size() == full.size());
    CHECK(write_dataset_csv(back) == text);
    const std::vector<Dataset> parts = {full, full};
    const auto both = concatenate(parts);
    CHECK(both.size() == 2 * full.size());
    CHECK(both.id(5) == 5);
    CHECK(both.labels()[4] == full.labels()[0]);
    CHECK_THROWS_AS(read_dataset_csv("a,b\n1,2\n"), SchemaError);
    CHECK_THROWS_AS(read_dataset_csv("a,Class\n1,G77\n"), SchemaError);
}

TEST_CASE("concatenation merges nominal vocabularies") {
    Dataset a({{"n", AttributeKind::Nominal, {"x", "y"}}});
    Dataset b({{"n", AttributeKind::Nominal, {"w", "y"}}});
    const double v0[] = {1};
    a.add_row(v0, UsageClass::G1);
    b.add_row(v0, UsageClass::G2);
    const std::vector<Dataset> parts = {a, b};
    const auto both = concatenate(parts);
    REQUIRE(both.schema()[0].values == std::vector<std::string>{"w", "x", "y"});
    CHECK(both.value(0, 0) == 2);
    CHECK(both.value(1, 0) == 2);
    Dataset c({{"m", AttributeKind::Numeric, {}}});
    const std::vector<Dataset> mismatched = {a, c};
    CHECK_THROWS_AS(concatenate(mismatched), SchemaError);
}
