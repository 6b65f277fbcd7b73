#include "vgaml/naive_bayes.hpp"

#include "vgaml/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace vgaml {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

}  // namespace

NaiveBayesModel train_naive_bayes(const Dataset& input, NaiveBayesMode mode, std::size_t bins) {
    if (input.empty()) throw SchemaError("cannot train on an empty dataset");
    NaiveBayesModel m;
    m.mode = mode;
    Dataset binned;
    const Dataset* data = &input;
    if (mode == NaiveBayesMode::Binned) {
        m.binning = fit_binning(input, bins);
        for (const auto& f : m.binning) m.binned_columns.push_back(input.attribute_index(f.attribute));
        binned = apply_binning(input, m.binning);
        data = &binned;
    }
    const Dataset& ds = *data;
    const auto counts = ds.class_counts();
    const auto n = static_cast<double>(ds.size());
    for (std::size_t c = 0; c < kNumClasses; ++c) m.priors[c] = static_cast<double>(counts[c]) / n;

    m.attributes.resize(ds.num_attributes());
    for (std::size_t a = 0; a < ds.num_attributes(); ++a) {
        const auto& attr = ds.schema()[a];
        auto& out = m.attributes[a];
        if (attr.kind == AttributeKind::Nominal) {
            out.kind = NaiveBayesAttribute::Kind::Nominal;
            const std::size_t v_count = attr.values.size();
            std::vector<std::vector<double>> tally(kNumClasses, std::vector<double>(v_count, 0.0));
            for (std::size_t i = 0; i < ds.size(); ++i) {
                tally[class_index(ds.label(i))][static_cast<std::size_t>(ds.value(i, a))] += 1.0;
            }
            for (std::size_t c = 0; c < kNumClasses; ++c) {
                out.log_prob[c].resize(v_count);
                const double denom = static_cast<double>(counts[c]) + static_cast<double>(v_count);
                for (std::size_t v = 0; v < v_count; ++v) out.log_prob[c][v] = std::log((tally[c][v] + 1.0) / denom);
            }
            continue;
        }
        double lo = ds.value(0, a), hi = lo;
        for (std::size_t i = 1; i < ds.size(); ++i) {
            lo = std::min(lo, ds.value(i, a));
            hi = std::max(hi, ds.value(i, a));
        }
        if (lo == hi) continue;
        out.kind = NaiveBayesAttribute::Kind::Gaussian;
        const double floor = 1e-6 * (hi - lo);
        std::array<double, kNumClasses> sum{}, sq{};
        for (std::size_t i = 0; i < ds.size(); ++i) sum[class_index(ds.label(i))] += ds.value(i, a);
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            if (counts[c] > 0) out.gaussian[c].mean = sum[c] / static_cast<double>(counts[c]);
        }
        for (std::size_t i = 0; i < ds.size(); ++i) {
            const auto c = class_index(ds.label(i));
            const double d = ds.value(i, a) - out.gaussian[c].mean;
            sq[c] += d * d;
        }
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            const double sd = counts[c] > 1 ? std::sqrt(sq[c] / static_cast<double>(counts[c] - 1)) : 0.0;
            out.gaussian[c].sd = std::max(sd, floor);
        }
    }
    return m;
}

NaivePrediction nb_predict(const NaiveBayesModel& model, std::span<const double> input) {
    if (input.size() != model.attributes.size()) {
        throw SchemaError("instance has " + std::to_string(input.size()) + " values, model expects " +
                          std::to_string(model.attributes.size()));
    }
    std::vector<double> instance(input.begin(), input.end());
    for (std::size_t f = 0; f < model.binning.size(); ++f) {
        const auto col = model.binned_columns[f];
        instance[col] = static_cast<double>(model.binning[f].bin(instance[col]));
    }
    NaivePrediction p;
    for (std::size_t c = 0; c < kNumClasses; ++c) {
        if (model.priors[c] <= 0) {
            p.log_posterior[c] = kNegInf;
            continue;
        }
        double score = std::log(model.priors[c]);
        for (std::size_t a = 0; a < model.attributes.size(); ++a) {
            const auto& attr = model.attributes[a];
            if (attr.kind == NaiveBayesAttribute::Kind::Gaussian) {
                const auto& g = attr.gaussian[c];
                const double z = (instance[a] - g.mean) / g.sd;
                score += -0.5 * z * z - std::log(g.sd) - 0.5 * std::log(2.0 * std::numbers::pi);
            } else if (attr.kind == NaiveBayesAttribute::Kind::Nominal) {
                const auto v = static_cast<std::size_t>(instance[a]);
                if (v >= attr.log_prob[c].size()) throw SchemaError("nominal value index out of range");
                score += attr.log_prob[c][v];
            }
        }
        p.log_posterior[c] = score;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumClasses; ++c) {
        if (p.log_posterior[c] > p.log_posterior[best]) best = c;
    }
    const double top = p.log_posterior[best];
    double total = 0;
    for (double s : p.log_posterior) {
        if (s != kNegInf) total += std::exp(s - top);
    }
    const double log_norm = top + std::log(total);
    for (auto& s : p.log_posterior) {
        if (s != kNegInf) s -= log_norm;
    }
    p.cls = class_from_index(best);
    return p;
}

}  // namespace vgaml
