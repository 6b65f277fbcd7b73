#include "vgaml/cluster_eval.hpp"

#include "vgaml/errors.hpp"

#include <cmath>

namespace vgaml {

namespace {

void require_numeric(const Dataset& ds) {
    for (const auto& a : ds.schema()) {
        if (a.kind != AttributeKind::Numeric) throw SchemaError("clustering needs numeric attributes; '" + a.name + "' is nominal");
    }
}

}  // namespace

Standardization fit_standardization(const Dataset& ds) {
    require_numeric(ds);
    if (ds.empty()) throw SchemaError("cannot standardize an empty dataset");
    const std::size_t d = ds.num_attributes();
    Standardization s{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
    const auto n = static_cast<double>(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < d; ++a) s.means[a] += ds.value(i, a);
    }
    for (auto& m : s.means) m /= n;
    if (ds.size() < 2) return s;
    std::vector<double> sq(d, 0.0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < d; ++a) {
            const double v = ds.value(i, a) - s.means[a];
            sq[a] += v * v;
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        const double sd = std::sqrt(sq[a] / (n - 1));
        s.sds[a] = sd > 0 ? sd : 1.0;
    }
    return s;
}

Dataset apply_standardization(const Dataset& ds, const Standardization& s) {
    if (s.means.size() != ds.num_attributes()) throw SchemaError("standardization does not match the dataset");
    Dataset out(ds.schema());
    std::vector<double> row(ds.num_attributes());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < row.size(); ++a) row[a] = (ds.value(i, a) - s.means[a]) / s.sds[a];
        out.add_row(row, ds.label(i), ds.id(i));
    }
    return out;
}

std::vector<std::vector<double>> numeric_rows(const Dataset& ds) {
    require_numeric(ds);
    std::vector<std::vector<double>> rows;
    rows.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto r = ds.row(i);
        rows.emplace_back(r.begin(), r.end());
    }
    return rows;
}

ClassesToClusters classes_to_clusters(std::span<const std::size_t> assignments, std::span<const UsageClass> labels,
                                      std::size_t cluster_count) {
    if (assignments.size() != labels.size()) throw SchemaError("assignment and label counts differ");
    ClassesToClusters r;
    r.cluster_counts.assign(cluster_count, ClassCounts{});
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        if (assignments[i] >= cluster_count) throw SchemaError("cluster index out of range");
        ++r.cluster_counts[assignments[i]][class_index(labels[i])];
    }
    r.cluster_class.resize(cluster_count);
    for (std::size_t c = 0; c < cluster_count; ++c) {
        const auto& counts = r.cluster_counts[c];
        bool any = false;
        for (auto v : counts) any = any || v > 0;
        if (any) r.cluster_class[c] = class_from_index(majority_index(counts));
    }
    r.total = assignments.size();
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        const auto predicted = *r.cluster_class[assignments[i]];
        ++r.confusion[class_index(labels[i])][class_index(predicted)];
        if (predicted == labels[i]) ++r.correct;
    }
    return r;
}

std::string render_cluster_table(const ClassesToClusters& result) {
    std::string out = "cluster";
    for (auto c : kAllClasses) out += "," + std::string(class_code(c));
    out += ",assigned\n";
    for (std::size_t k = 0; k < result.cluster_counts.size(); ++k) {
        out += std::to_string(k);
        for (auto v : result.cluster_counts[k]) out += "," + std::to_string(v);
        out += "," + (result.cluster_class[k] ? std::string(class_code(*result.cluster_class[k])) : std::string("none"));
        out += "\n";
    }
    return out;
}

std::string render_assignments(std::span<const std::size_t> ids, std::span<const std::size_t> assignments,
                               std::span<const UsageClass> labels) {
    std::string out = "instance,cluster,class\n";
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        out += std::to_string(ids[i]) + "," + std::to_string(assignments[i]) + "," + std::string(class_code(labels[i])) + "\n";
    }
    return out;
}

}  // namespace vgaml
