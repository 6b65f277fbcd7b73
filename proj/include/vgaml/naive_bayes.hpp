#pragma once

#include "vgaml/binning.hpp"
#include "vgaml/dataset.hpp"
#include "vgaml/usage_class.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace vgaml {

enum class NaiveBayesMode {
    Gaussian,  ///< numeric attributes as per-class normal densities
    Binned,    ///< numeric attributes discretized into equal-width bins first
};

struct GaussianParams {
    double mean = 0;
    double sd = 1;
};

struct NaiveBayesAttribute {
    enum class Kind { Gaussian, Nominal, Ignored } kind = Kind::Ignored;
    /// Per class, Gaussian mode.
    std::array<GaussianParams, kNumClasses> gaussian{};
    /// Per class, log of the Laplace-smoothed value probabilities.
    std::array<std::vector<double>, kNumClasses> log_prob{};
};

struct NaiveBayesModel {
    NaiveBayesMode mode = NaiveBayesMode::Gaussian;
    /// Class frequency in training; zero for absent classes.
    std::array<double, kNumClasses> priors{};
    std::vector<NaiveBayesAttribute> attributes;
    /// Binned mode: filters applied to numeric attributes before lookup.
    std::vector<BinningFilter> binning;
    /// Attribute index of each binning filter.
    std::vector<std::size_t> binned_columns;
};

struct NaivePrediction {
    UsageClass cls = UsageClass::G1;
    /// Log posterior per class, normalized so the exponentials sum to 1;
    /// -inf for classes absent from training.
    std::array<double, kNumClasses> log_posterior{};
};

/// Priors are class frequencies. Gaussian sd is the sample sd per class,
/// floored at 1e-6 of the attribute's training range; attributes constant
/// over the training set carry no evidence and are ignored. Nominal tables
/// use add-one smoothing. Throws SchemaError on an empty dataset.
NaiveBayesModel train_naive_bayes(const Dataset& ds, NaiveBayesMode mode = NaiveBayesMode::Gaussian,
                                  std::size_t bins = 10);

/// Argmax of log prior plus summed log likelihoods; ties go to the earlier class.
NaivePrediction nb_predict(const NaiveBayesModel& model, std::span<const double> instance);

}  // namespace vgaml
