#include "vgaml/zeror.hpp"

#include "vgaml/errors.hpp"

namespace vgaml {

ZeroRModel train_zeror(const Dataset& ds) {
    if (ds.empty()) throw SchemaError("cannot train on an empty dataset");
    ZeroRModel m;
    m.counts = ds.class_counts();
    const auto best = majority_index(m.counts);
    m.majority = class_from_index(best);
    m.proportion = static_cast<double>(m.counts[best]) / static_cast<double>(ds.size());
    return m;
}

}  // namespace vgaml
