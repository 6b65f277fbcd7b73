#pragma once

#include "vgaml/label_map.hpp"
#include "vgaml/plan_ingest.hpp"
#include "vgaml/usage_class.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vgaml {

enum class AttributeKind { Numeric, Nominal };

struct Attribute {
    std::string name;
    AttributeKind kind = AttributeKind::Numeric;
    /// Value labels of a nominal attribute; rows store the label index.
    std::vector<std::string> values;

    friend bool operator==(const Attribute&, const Attribute&) = default;
};

/// Instance table: an attribute schema, row-major values and the class of
/// every row. Nominal values are stored as their index in Attribute::values.
/// `ids` carries each row's original instance number through subsetting.
class Dataset {
public:
    Dataset() = default;
    explicit Dataset(std::vector<Attribute> schema) : schema_(std::move(schema)) {}

    const std::vector<Attribute>& schema() const { return schema_; }
    std::size_t num_attributes() const { return schema_.size(); }
    std::size_t size() const { return classes_.size(); }
    bool empty() const { return classes_.empty(); }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * schema_.size(), schema_.size()};
    }
    double value(std::size_t i, std::size_t attr) const { return values_[i * schema_.size() + attr]; }
    UsageClass label(std::size_t i) const { return classes_[i]; }
    std::size_t id(std::size_t i) const { return ids_[i]; }
    const std::vector<UsageClass>& labels() const { return classes_; }

    /// Appends a row; `values` must match the schema width. The id defaults
    /// to the row's position.
    void add_row(std::span<const double> values, UsageClass cls);
    void add_row(std::span<const double> values, UsageClass cls, std::size_t id);

    /// Index of the named attribute; throws SchemaError if absent.
    std::size_t attribute_index(std::string_view name) const;

    /// Rows at `indices`, in that order, keeping ids.
    Dataset subset(std::span<const std::size_t> indices) const;

    /// Per-class row counts.
    ClassCounts class_counts() const;

    friend bool operator==(const Dataset&, const Dataset&) = default;

private:
    std::vector<Attribute> schema_;
    std::vector<double> values_;
    std::vector<UsageClass> classes_;
    std::vector<std::size_t> ids_;
};

/// Builds a dataset with every plan column except the accommodation label,
/// which becomes the class after grouping. Identifier-like columns
/// (ref, polygon ids, team) are nominal; x, y and the ten attributes numeric.
Dataset dataset_from_records(std::span<const PlanRecord> records, const LabelMap& labels);

enum class AttributePreset {
    Full10,    ///< the ten visibility attributes
    Subset8,   ///< Full10 without Integration [HH] and Integration [P-value]
    Pca,       ///< principal-component columns ("PC1", "PC2", ...)
    Explicit,  ///< the given names, in the given order
};

/// Projects `ds` onto the preset's attributes. Rows and classes are untouched.
Dataset select_attributes(const Dataset& ds, AttributePreset preset,
                          std::span<const std::string> explicit_names = {});

AttributePreset parse_preset(std::string_view text);

/// Dataset CSV: one column per attribute plus a final "Class" column holding
/// the class code. Numbers use the shortest exact representation.
std::string write_dataset_csv(const Dataset& ds);

/// Columns whose every value is a finite number are numeric, the rest nominal
/// (labels sorted).
Dataset read_dataset_csv(std::string_view text);

/// Concatenates datasets with identical schemas, renumbering ids.
Dataset concatenate(std::span<const Dataset> parts);

}  // namespace vgaml
