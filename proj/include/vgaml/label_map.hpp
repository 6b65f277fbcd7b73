#pragma once

#include "vgaml/usage_class.hpp"

#include <map>
#include <string>
#include <string_view>

namespace vgaml {

/// Marker used by the source plans for cells without a usage label.
inline constexpr std::string_view kMissingLabel = "?";

/// Raw plan label -> grouped usage class. Lookup is exact and case-sensitive;
/// an unmapped label is an error rather than a silent class.
class LabelMap {
public:
    LabelMap() = default;

    /// The grouping table shipped with the library (also in data/labelmap.csv).
    static const LabelMap& builtin();

    /// Two-column CSV "raw_label,class" with a header row.
    static LabelMap from_csv(std::string_view text);

    void add(std::string raw, UsageClass cls);

    /// Throws SchemaError("unknown label ...") for labels not in the table.
    UsageClass group(std::string_view raw) const;

    bool contains(std::string_view raw) const;
    const std::map<std::string, UsageClass, std::less<>>& entries() const { return entries_; }

    std::string to_csv() const;

    friend bool operator==(const LabelMap&, const LabelMap&) = default;

private:
    std::map<std::string, UsageClass, std::less<>> entries_;
};

/// Groups with the built-in table.
UsageClass group_label(std::string_view raw);

}  // namespace vgaml
