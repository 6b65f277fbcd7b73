#include "vgaml/dataset.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace vgaml {

void Dataset::add_row(std::span<const double> values, UsageClass cls) { add_row(values, cls, classes_.size()); }

void Dataset::add_row(std::span<const double> values, UsageClass cls, std::size_t id) {
    if (values.size() != schema_.size()) {
        throw SchemaError("dataset row has " + std::to_string(values.size()) + " values, schema has " +
                          std::to_string(schema_.size()));
    }
    values_.insert(values_.end(), values.begin(), values.end());
    classes_.push_back(cls);
    ids_.push_back(id);
}

std::size_t Dataset::attribute_index(std::string_view name) const {
    for (std::size_t i = 0; i < schema_.size(); ++i) {
        if (schema_[i].name == name) return i;
    }
    throw SchemaError("unknown attribute '" + std::string(name) + "'");
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
    Dataset out(schema_);
    out.values_.reserve(indices.size() * schema_.size());
    out.classes_.reserve(indices.size());
    out.ids_.reserve(indices.size());
    for (auto i : indices) out.add_row(row(i), classes_[i], ids_[i]);
    return out;
}

ClassCounts Dataset::class_counts() const {
    ClassCounts counts{};
    for (auto c : classes_) ++counts[class_index(c)];
    return counts;
}

Dataset dataset_from_records(std::span<const PlanRecord> records, const LabelMap& labels) {
    // nominal columns: value -> index in sorted order
    auto nominal = [&](auto getter, std::string name) {
        std::map<std::string, double> index;
        for (const auto& r : records) index.emplace(getter(r), 0.0);
        Attribute attr{std::move(name), AttributeKind::Nominal, {}};
        for (auto& [value, idx] : index) {
            idx = static_cast<double>(attr.values.size());
            attr.values.push_back(value);
        }
        return std::pair{attr, index};
    };
    auto [ref_attr, ref_idx] = nominal([](const PlanRecord& r) { return r.ref_id; }, "Ref");
    auto [apoly_attr, apoly_idx] = nominal([](const PlanRecord& r) { return r.accommodation_poly; },
                                           "Accommodation Poly ID");
    auto [team_attr, team_idx] = nominal([](const PlanRecord& r) { return r.team_label; }, "Team");
    auto [tpoly_attr, tpoly_idx] = nominal([](const PlanRecord& r) { return r.team_poly; }, "Team Poly ID");

    std::vector<Attribute> schema = {ref_attr, {"X", AttributeKind::Numeric, {}}, {"Y", AttributeKind::Numeric, {}},
                                     apoly_attr, team_attr, tpoly_attr};
    for (std::size_t a = 0; a < kNumVgaAttributes; ++a) {
        schema.push_back({std::string(attribute_name(static_cast<VgaAttribute>(a))), AttributeKind::Numeric, {}});
    }

    Dataset ds(std::move(schema));
    std::vector<double> row;
    for (const auto& r : records) {
        row.assign({ref_idx.at(r.ref_id), r.x, r.y, apoly_idx.at(r.accommodation_poly), team_idx.at(r.team_label),
                    tpoly_idx.at(r.team_poly)});
        row.insert(row.end(), r.attributes.begin(), r.attributes.end());
        ds.add_row(row, labels.group(r.accommodation_label));
    }
    return ds;
}

Dataset select_attributes(const Dataset& ds, AttributePreset preset, std::span<const std::string> explicit_names) {
    std::vector<std::string> names;
    switch (preset) {
        case AttributePreset::Full10:
        case AttributePreset::Subset8:
            for (std::size_t a = 0; a < kNumVgaAttributes; ++a) {
                const auto attr = static_cast<VgaAttribute>(a);
                if (preset == AttributePreset::Subset8 &&
                    (attr == VgaAttribute::IntegrationHH || attr == VgaAttribute::IntegrationPValue)) {
                    continue;
                }
                names.emplace_back(attribute_name(attr));
            }
            break;
        case AttributePreset::Pca:
            for (const auto& a : ds.schema()) {
                if (a.name.size() > 2 && a.name.starts_with("PC") &&
                    std::all_of(a.name.begin() + 2, a.name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
                    names.push_back(a.name);
                }
            }
            if (names.empty()) throw SchemaError("pca preset: dataset has no principal-component columns");
            break;
        case AttributePreset::Explicit:
            if (explicit_names.empty()) throw SchemaError("explicit attribute list is empty");
            names.assign(explicit_names.begin(), explicit_names.end());
            break;
    }

    std::vector<std::size_t> cols;
    std::vector<Attribute> schema;
    for (const auto& n : names) {
        cols.push_back(ds.attribute_index(n));
        schema.push_back(ds.schema()[cols.back()]);
    }
    Dataset out(std::move(schema));
    std::vector<double> row(cols.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t c = 0; c < cols.size(); ++c) row[c] = ds.value(i, cols[c]);
        out.add_row(row, ds.label(i), ds.id(i));
    }
    return out;
}

AttributePreset parse_preset(std::string_view text) {
    if (text == "full10") return AttributePreset::Full10;
    if (text == "subset8") return AttributePreset::Subset8;
    if (text == "pca") return AttributePreset::Pca;
    if (text == "explicit") return AttributePreset::Explicit;
    throw SchemaError("unknown attribute preset '" + std::string(text) + "'");
}

std::string write_dataset_csv(const Dataset& ds) {
    csv::Row header;
    for (const auto& a : ds.schema()) header.push_back(a.name);
    header.emplace_back("Class");
    std::string out = csv::join(header) + "\n";
    csv::Row row;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        row.clear();
        for (std::size_t a = 0; a < ds.num_attributes(); ++a) {
            const auto& attr = ds.schema()[a];
            const double v = ds.value(i, a);
            row.push_back(attr.kind == AttributeKind::Nominal ? attr.values.at(static_cast<std::size_t>(v))
                                                              : csv::format_exact(v));
        }
        row.emplace_back(class_code(ds.label(i)));
        out += csv::join(row) + "\n";
    }
    return out;
}

Dataset read_dataset_csv(std::string_view text) {
    const auto rows = csv::parse(text);
    if (rows.empty()) throw SchemaError("dataset csv: missing header row");
    const auto& header = rows.front();
    if (header.empty() || header.back() != "Class") throw SchemaError("dataset csv: last column must be 'Class'");
    const std::size_t width = header.size() - 1;

    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != header.size()) {
            throw SchemaError("dataset csv row " + std::to_string(r) + ": expected " +
                              std::to_string(header.size()) + " columns, got " + std::to_string(rows[r].size()));
        }
    }

    std::vector<Attribute> schema(width);
    std::vector<std::map<std::string, double>> nominal_index(width);
    for (std::size_t c = 0; c < width; ++c) {
        schema[c].name = header[c];
        bool numeric = true;
        double v;
        for (std::size_t r = 1; r < rows.size() && numeric; ++r) {
            numeric = csv::parse_double(rows[r][c], v) && std::isfinite(v);
        }
        if (!numeric) {
            schema[c].kind = AttributeKind::Nominal;
            for (std::size_t r = 1; r < rows.size(); ++r) nominal_index[c].emplace(rows[r][c], 0.0);
            for (auto& [label, idx] : nominal_index[c]) {
                idx = static_cast<double>(schema[c].values.size());
                schema[c].values.push_back(label);
            }
        }
    }

    Dataset ds(std::move(schema));
    std::vector<double> values(width);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < width; ++c) {
            if (ds.schema()[c].kind == AttributeKind::Nominal) {
                values[c] = nominal_index[c].at(rows[r][c]);
            } else {
                csv::parse_double(rows[r][c], values[c]);
            }
        }
        const auto cls = parse_class(rows[r].back());
        if (!cls) throw SchemaError("dataset csv row " + std::to_string(r) + ": unknown class '" + rows[r].back() + "'");
        ds.add_row(values, *cls);
    }
    return ds;
}

Dataset concatenate(std::span<const Dataset> parts) {
    if (parts.empty()) return {};
    std::vector<Attribute> schema = parts.front().schema();
    for (const auto& p : parts) {
        bool same = p.num_attributes() == schema.size();
        for (std::size_t a = 0; same && a < schema.size(); ++a) {
            same = p.schema()[a].name == schema[a].name && p.schema()[a].kind == schema[a].kind;
        }
        if (!same) throw SchemaError("cannot concatenate datasets with different attributes");
    }
    // Nominal vocabularies are merged into one sorted list per attribute.
    for (std::size_t a = 0; a < schema.size(); ++a) {
        if (schema[a].kind != AttributeKind::Nominal) continue;
        std::set<std::string> all;
        for (const auto& p : parts) all.insert(p.schema()[a].values.begin(), p.schema()[a].values.end());
        schema[a].values.assign(all.begin(), all.end());
    }
    Dataset out(schema);
    std::vector<double> row(schema.size());
    for (const auto& p : parts) {
        std::vector<std::vector<double>> remap(schema.size());
        for (std::size_t a = 0; a < schema.size(); ++a) {
            if (schema[a].kind != AttributeKind::Nominal) continue;
            for (const auto& v : p.schema()[a].values) {
                const auto& vals = schema[a].values;
                remap[a].push_back(static_cast<double>(std::lower_bound(vals.begin(), vals.end(), v) - vals.begin()));
            }
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            for (std::size_t a = 0; a < schema.size(); ++a) {
                const double v = p.value(i, a);
                row[a] = remap[a].empty() ? v : remap[a][static_cast<std::size_t>(v)];
            }
            out.add_row(row, p.label(i));
        }
    }
    return out;
}

}  // namespace vgaml
