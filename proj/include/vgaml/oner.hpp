#pragma once

#include "vgaml/dataset.hpp"
#include "vgaml/usage_class.hpp"

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace vgaml {

inline constexpr std::size_t kDefaultMinBucket = 6;

/// One rule of a numeric OneR model: values below `upper` (and at or above
/// the previous rule's bound) predict `cls`. The last rule has upper = +inf.
struct OneRInterval {
    double upper = std::numeric_limits<double>::infinity();
    UsageClass cls = UsageClass::G1;
};

struct OneRModel {
    std::size_t attribute = 0;
    std::string attribute_name;
    bool numeric = true;
    std::vector<OneRInterval> intervals;
    /// Nominal rules: class per value index.
    std::vector<UsageClass> value_classes;
    std::vector<std::string> value_names;
    /// Prediction for nominal values never seen in training.
    UsageClass fallback = UsageClass::G1;
    std::size_t correct = 0;
    std::size_t total = 0;

    std::size_t errors() const { return total - correct; }
};

/// Intervals for one numeric attribute: sort by value, fill each interval
/// until its majority class has min_bucket members, extend it while the next
/// value has that class or repeats the last value, cut at the midpoint, then
/// merge neighbours predicting the same class.
std::vector<OneRInterval> oner_discretize(std::span<const double> values, std::span<const UsageClass> labels,
                                          std::size_t min_bucket, std::size_t* correct = nullptr);

/// Builds a rule per attribute and keeps the one with fewest training
/// errors; ties go to the earlier attribute. Throws SchemaError on an empty
/// dataset.
OneRModel train_oner(const Dataset& ds, std::size_t min_bucket = kDefaultMinBucket);

UsageClass oner_predict(const OneRModel& model, std::span<const double> instance);

/// Rule list: the attribute name and a colon, one "< bound -> class" line
/// per interval, ">= bound -> class" for the last, and the
/// "(correct/total instances correct)" trailer.
std::string render_oner(const OneRModel& model);

}  // namespace vgaml
