#include "vgaml/label_map.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <array>
#include <utility>

namespace vgaml {
namespace {

using enum UsageClass;

// Grouping of the source plan labels. The missing marker "?" is its own group,
// secondary circulation (G11).
constexpr std::array<std::pair<std::string_view, UsageClass>, 41> kBuiltin = {{
    {"WRKSP-OPN", G1},      {"ALT-OPN-WTN", G1},     {"ALT-OPN", G1},
    {"WRKSP-CEL", G2},      {"ALT-CLD-WTN", G2},     {"ALT-CLD-AWY", G2},
    {"ALT-CEL", G2},        {"ALT-LIB", G2},         {"ALT-QUT", G2},
    {"MTG-BKB", G3},        {"MTG-OTH-TRN", G3},     {"MTG-NBK", G3},
    {"ALT-FLX", G3},        {"OTHFCL-AVC", G3},      {"MTG", G3},
    {"OTHFCL-STO-CLD", G4}, {"OTHFCL-STO-HGT", G4},  {"OTHFCL-CMM", G4},
    {"OTHFCL-STO", G4},     {"OTHFCL-CAN-SIT", G5},  {"OTHFCL-CAN", G5},
    {"OTHFCL-TEA-OPN", G5}, {"OTHFCL-TEA-CLD", G5},  {"OTHFCL-TEA", G5},
    {"OTHFCL-CAN-KTN", G6}, {"OTHFCL-CAN-SRV", G6},  {"OTHFCL-TEA-CAT", G6},
    {"OTHFCL-PRC-REP", G7}, {"OTHFCL-PRC-AWY", G7},  {"OTHFCL-PRC-WTH", G7},
    {"OTHFCL-PRC", G7},     {"OTHFCL-REC-WTA", G8},  {"OTHFCL-REC", G8},
    {"OTHFCL-PST", G8},     {"ALT-OPN-AWY", G8},     {"OTHFCL-GYM", G9},
    {"OTHFCL-NUR", G9},     {"CIRC-PRI", G10},       {"?", G11},
    {"EXCLUDE", Exclude},   {"OTHFCL-STO-LOW", Exclude},
}};

}  // namespace

const LabelMap& LabelMap::builtin() {
    static const LabelMap map = [] {
        LabelMap m;
        for (const auto& [raw, cls] : kBuiltin) m.add(std::string(raw), cls);
        return m;
    }();
    return map;
}

LabelMap LabelMap::from_csv(std::string_view text) {
    const auto rows = csv::parse(text);
    if (rows.empty()) throw SchemaError("label map: missing header row");
    LabelMap map;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != 2) {
            throw SchemaError("label map row " + std::to_string(r) + ": expected 2 columns, got " +
                              std::to_string(row.size()));
        }
        const auto cls = parse_class(row[1]);
        if (!cls) throw SchemaError("label map row " + std::to_string(r) + ": unknown class '" + row[1] + "'");
        map.add(row[0], *cls);
    }
    return map;
}

void LabelMap::add(std::string raw, UsageClass cls) {
    auto [it, inserted] = entries_.emplace(std::move(raw), cls);
    if (!inserted && it->second != cls) {
        throw SchemaError("label map: conflicting classes for label '" + it->first + "'");
    }
}

UsageClass LabelMap::group(std::string_view raw) const {
    const auto it = entries_.find(raw);
    if (it == entries_.end()) throw SchemaError("unknown label '" + std::string(raw) + "'");
    return it->second;
}

bool LabelMap::contains(std::string_view raw) const { return entries_.find(raw) != entries_.end(); }

std::string LabelMap::to_csv() const {
    std::string out = "raw_label,class\n";
    for (const auto& [raw, cls] : entries_) {
        out += csv::escape(raw) + "," + std::string(class_code(cls)) + "\n";
    }
    return out;
}

UsageClass group_label(std::string_view raw) { return LabelMap::builtin().group(raw); }

}  // namespace vgaml
