#include "vgaml/oner.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vgaml {

std::vector<OneRInterval> oner_discretize(std::span<const double> values, std::span<const UsageClass> labels,
                                          std::size_t min_bucket, std::size_t* correct) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    struct Raw {
        double upper;
        UsageClass cls;
        std::size_t hits;
    };
    std::vector<Raw> raw;
    std::size_t it = 0;
    while (it < n) {
        ClassCounts counts{};
        auto take = [&] { ++counts[class_index(labels[order[it++]])]; };
        do {
            take();
        } while (it < n && counts[majority_index(counts)] < min_bucket);
        while (it < n && class_index(labels[order[it]]) == majority_index(counts)) take();
        while (it < n && values[order[it]] == values[order[it - 1]]) take();
        const auto best = majority_index(counts);
        const double upper = it < n ? (values[order[it]] + values[order[it - 1]]) / 2.0
                                    : std::numeric_limits<double>::infinity();
        raw.push_back({upper, class_from_index(best), static_cast<std::size_t>(counts[best])});
    }

    std::vector<OneRInterval> out;
    std::size_t hits = 0;
    for (const auto& r : raw) {
        hits += r.hits;
        if (!out.empty() && out.back().cls == r.cls) {
            out.back().upper = r.upper;
        } else {
            out.push_back({r.upper, r.cls});
        }
    }
    if (correct) *correct = hits;
    return out;
}

OneRModel train_oner(const Dataset& ds, std::size_t min_bucket) {
    if (ds.empty()) throw SchemaError("cannot train on an empty dataset");
    if (ds.num_attributes() == 0) throw SchemaError("OneR needs at least one attribute");
    if (min_bucket == 0) throw SchemaError("minimum bucket size must be positive");
    const auto fallback = class_from_index(majority_index(ds.class_counts()));
    OneRModel best;
    bool have = false;
    std::vector<double> column(ds.size());
    for (std::size_t a = 0; a < ds.num_attributes(); ++a) {
        const auto& attr = ds.schema()[a];
        for (std::size_t i = 0; i < ds.size(); ++i) column[i] = ds.value(i, a);
        OneRModel m;
        m.attribute = a;
        m.attribute_name = attr.name;
        m.total = ds.size();
        m.fallback = fallback;
        if (attr.kind == AttributeKind::Numeric) {
            m.intervals = oner_discretize(column, ds.labels(), min_bucket, &m.correct);
        } else {
            m.numeric = false;
            m.value_names = attr.values;
            std::vector<ClassCounts> counts(attr.values.size(), ClassCounts{});
            for (std::size_t i = 0; i < ds.size(); ++i) {
                ++counts[static_cast<std::size_t>(column[i])][class_index(ds.label(i))];
            }
            for (const auto& c : counts) {
                const auto b = majority_index(c);
                const bool seen = std::any_of(c.begin(), c.end(), [](auto v) { return v > 0; });
                m.value_classes.push_back(seen ? class_from_index(b) : fallback);
                m.correct += c[b];
            }
        }
        if (!have || m.correct > best.correct) {
            best = std::move(m);
            have = true;
        }
    }
    return best;
}

UsageClass oner_predict(const OneRModel& model, std::span<const double> instance) {
    const double v = instance[model.attribute];
    if (!model.numeric) {
        const auto i = static_cast<std::size_t>(v);
        return i < model.value_classes.size() ? model.value_classes[i] : model.fallback;
    }
    for (const auto& r : model.intervals) {
        if (v < r.upper) return r.cls;
    }
    return model.intervals.back().cls;
}

std::string render_oner(const OneRModel& model) {
    std::string out = model.attribute_name + ":\n";
    if (model.numeric) {
        const auto& iv = model.intervals;
        for (std::size_t i = 0; i + 1 < iv.size(); ++i) {
            out += "< " + csv::format_exact(iv[i].upper) + " -> " + std::string(class_rule_name(iv[i].cls)) + "\n";
        }
        const std::string last_bound = iv.size() > 1 ? csv::format_exact(iv[iv.size() - 2].upper) : "-inf";
        out += ">= " + last_bound + " -> " + std::string(class_rule_name(iv.back().cls)) + "\n";
    } else {
        for (std::size_t v = 0; v < model.value_classes.size(); ++v) {
            out += model.value_names[v] + " -> " + std::string(class_rule_name(model.value_classes[v])) + "\n";
        }
    }
    out += "(" + std::to_string(model.correct) + "/" + std::to_string(model.total) + " instances correct)\n";
    return out;
}

}  // namespace vgaml
