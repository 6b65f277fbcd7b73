#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/usage_class.hpp"

namespace vgaml {

struct ZeroRModel {
    UsageClass majority = UsageClass::G1;
    /// Share of training instances in the majority class.
    double proportion = 0;
    ClassCounts counts{};
};

/// Throws SchemaError on an empty dataset.
ZeroRModel train_zeror(const Dataset& ds);

}  // namespace vgaml
