#include "vgaml/binning.hpp"

#include "vgaml/errors.hpp"

#include <algorithm>
#include <cmath>

namespace vgaml {

std::size_t BinningFilter::bin(double value) const {
    const std::size_t n = bin_count();
    if (n <= 1 || value <= edges.front()) return 0;
    if (value >= edges.back()) return n - 1;
    const double width = (edges.back() - edges.front()) / static_cast<double>(n);
    auto i = static_cast<std::size_t>(std::floor((value - edges.front()) / width));
    i = std::min(i, n - 1);
    // Correct for rounding so the result agrees with the stored edges.
    while (i > 0 && value < edges[i]) --i;
    while (i + 1 < n && value >= edges[i + 1]) ++i;
    return i;
}

std::string BinningFilter::label(std::size_t i) { return "b" + std::to_string(i + 1); }

BinningFilter equal_width_bins(const Dataset& ds, std::size_t attr, std::size_t n) {
    if (attr >= ds.num_attributes()) throw SchemaError("attribute index out of range");
    const auto& a = ds.schema()[attr];
    if (a.kind != AttributeKind::Numeric) throw SchemaError("cannot bin nominal attribute '" + a.name + "'");
    if (ds.empty()) throw SchemaError("cannot bin attribute '" + a.name + "' of an empty dataset");
    if (n == 0) throw SchemaError("bin count must be positive");
    double lo = ds.value(0, attr), hi = lo;
    for (std::size_t i = 1; i < ds.size(); ++i) {
        lo = std::min(lo, ds.value(i, attr));
        hi = std::max(hi, ds.value(i, attr));
    }
    BinningFilter f;
    f.attribute = a.name;
    if (lo == hi) {
        f.edges = {lo, hi};
        return f;
    }
    const double width = (hi - lo) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) f.edges.push_back(lo + static_cast<double>(i) * width);
    f.edges.push_back(hi);
    return f;
}

std::vector<BinningFilter> fit_binning(const Dataset& ds, std::size_t n) {
    std::vector<BinningFilter> filters;
    for (std::size_t a = 0; a < ds.num_attributes(); ++a) {
        if (ds.schema()[a].kind == AttributeKind::Numeric) filters.push_back(equal_width_bins(ds, a, n));
    }
    return filters;
}

Dataset apply_binning(const Dataset& ds, const std::vector<BinningFilter>& filters) {
    std::vector<Attribute> schema = ds.schema();
    std::vector<const BinningFilter*> by_attr(schema.size(), nullptr);
    for (const auto& f : filters) {
        const auto a = ds.attribute_index(f.attribute);
        by_attr[a] = &f;
        schema[a].kind = AttributeKind::Nominal;
        schema[a].values.clear();
        for (std::size_t b = 0; b < f.bin_count(); ++b) schema[a].values.push_back(BinningFilter::label(b));
    }
    Dataset out(std::move(schema));
    std::vector<double> row(ds.num_attributes());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < row.size(); ++a) {
            const double v = ds.value(i, a);
            row[a] = by_attr[a] ? static_cast<double>(by_attr[a]->bin(v)) : v;
        }
        out.add_row(row, ds.label(i), ds.id(i));
    }
    return out;
}

}  // namespace vgaml
