#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace vgaml {

/// The twelve grouped usage classes. Enumerator order is the canonical order
/// used by every confusion matrix and every tie-break.
enum class UsageClass : std::uint8_t {
    G1,   // Open Workspaces
    G2,   // Cellular Workspaces
    G3,   // Meeting Spaces
    G4,   // Storage Facilities
    G5,   // Kitchen/Tea Seating
    G6,   // Kitchen/Tea Service
    G7,   // Print/Copy Facilities
    G8,   // Reception
    G9,   // Extra Facilities
    G10,  // Primary Circulation
    G11,  // Secondary Circulation
    Exclude,
};

inline constexpr std::size_t kNumClasses = 12;

inline constexpr std::array<UsageClass, kNumClasses> kAllClasses = {
    UsageClass::G1, UsageClass::G2, UsageClass::G3,  UsageClass::G4,
    UsageClass::G5, UsageClass::G6, UsageClass::G7,  UsageClass::G8,
    UsageClass::G9, UsageClass::G10, UsageClass::G11, UsageClass::Exclude,
};

constexpr std::size_t class_index(UsageClass c) { return static_cast<std::size_t>(c); }
constexpr UsageClass class_from_index(std::size_t i) { return static_cast<UsageClass>(i); }

/// Short code: "G1" .. "G11", "EXCLUDE".
std::string_view class_code(UsageClass c);

/// Human-readable name, e.g. "Open Workspaces".
std::string_view class_display_name(UsageClass c);

/// Rule-list name, e.g. "G10:Primary_Circulation".
std::string_view class_rule_name(UsageClass c);

/// Accepts the short code or the rule-list name.
std::optional<UsageClass> parse_class(std::string_view text);

using ClassCounts = std::array<std::uint64_t, kNumClasses>;

/// Rows are actual classes, columns predicted classes, both in canonical order.
using ConfusionCounts = std::array<ClassCounts, kNumClasses>;

/// Index of the largest count; ties go to the earliest class in canonical order.
std::size_t majority_index(const ClassCounts& counts);

}  // namespace vgaml
