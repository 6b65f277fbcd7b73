#include "vgaml/usage_class.hpp"

namespace vgaml {
namespace {

struct ClassNames {
    std::string_view code;
    std::string_view display;
    std::string_view rule;
};

constexpr std::array<ClassNames, kNumClasses> kNames = {{
    {"G1", "Open Workspaces", "G1:Open_Workspaces"},
    {"G2", "Cellular Workspaces", "G2:Cellular_Workspaces"},
    {"G3", "Meeting Spaces", "G3:Meeting_Spaces"},
    {"G4", "Storage Facilities", "G4:Storage_Facilities"},
    {"G5", "Kitchen/Tea Seating", "G5:Kitchen/Tea_Seating"},
    {"G6", "Kitchen/Tea Service", "G6:Kitchen/Tea_Service"},
    {"G7", "Print/Copy Facilities", "G7:Print/Copy_Facilities"},
    {"G8", "Reception", "G8:Reception"},
    {"G9", "Extra Facilities", "G9:Extra_Facilities"},
    {"G10", "Primary Circulation", "G10:Primary_Circulation"},
    {"G11", "Secondary Circulation", "G11:Secondary_Circulation"},
    {"EXCLUDE", "EXCLUDE", "EXCLUDE"},
}};

}  // namespace

std::string_view class_code(UsageClass c) { return kNames[class_index(c)].code; }
std::string_view class_display_name(UsageClass c) { return kNames[class_index(c)].display; }
std::string_view class_rule_name(UsageClass c) { return kNames[class_index(c)].rule; }

std::optional<UsageClass> parse_class(std::string_view text) {
    for (std::size_t i = 0; i < kNumClasses; ++i) {
        if (text == kNames[i].code || text == kNames[i].rule) return class_from_index(i);
    }
    return std::nullopt;
}

std::size_t majority_index(const ClassCounts& counts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < kNumClasses; ++i) {
        if (counts[i] > counts[best]) best = i;
    }
    return best;
}

}  // namespace vgaml
