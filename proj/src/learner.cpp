#include "vgaml/learner.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include "json.hpp"

#include <cmath>

namespace vgaml {

LearnerKind parse_learner_kind(std::string_view text) {
    if (text == "zeror") return LearnerKind::ZeroR;
    if (text == "oner") return LearnerKind::OneR;
    if (text == "nb" || text == "naive-bayes" || text == "naivebayes") return LearnerKind::NaiveBayes;
    if (text == "tree" || text == "j48") return LearnerKind::Tree;
    throw SchemaError("unknown learner '" + std::string(text) + "'");
}

std::string_view learner_kind_name(LearnerKind kind) {
    switch (kind) {
        case LearnerKind::ZeroR: return "zeror";
        case LearnerKind::OneR: return "oner";
        case LearnerKind::NaiveBayes: return "nb";
        case LearnerKind::Tree: return "tree";
    }
    return "?";
}

PruningKind parse_pruning(std::string_view text) {
    if (text == "none") return PruningKind::None;
    if (text == "rep") return PruningKind::ReducedError;
    if (text == "ebp") return PruningKind::ErrorBased;
    throw SchemaError("unknown pruning '" + std::string(text) + "'");
}

std::string_view pruning_name(PruningKind kind) {
    switch (kind) {
        case PruningKind::None: return "none";
        case PruningKind::ReducedError: return "rep";
        case PruningKind::ErrorBased: return "ebp";
    }
    return "?";
}

NaiveBayesMode parse_nb_mode(std::string_view text) {
    if (text == "gaussian") return NaiveBayesMode::Gaussian;
    if (text == "binned") return NaiveBayesMode::Binned;
    throw SchemaError("unknown naive Bayes mode '" + std::string(text) + "'");
}

SplitCriterion parse_criterion(std::string_view text) {
    if (text == "gain") return SplitCriterion::InfoGain;
    if (text == "gain-ratio") return SplitCriterion::GainRatio;
    throw SchemaError("unknown split criterion '" + std::string(text) + "'");
}

namespace {

using nlohmann::json;

json counts_json(const ClassCounts& counts) {
    json j = json::object();
    for (std::size_t c = 0; c < kNumClasses; ++c) j[std::string(class_code(class_from_index(c)))] = counts[c];
    return j;
}

class ZeroRWrapper final : public Model {
public:
    explicit ZeroRWrapper(ZeroRModel m) : m_(m) {}
    UsageClass predict(std::span<const double>) const override { return m_.majority; }
    ModelInfo info() const override { return {"zeror", "", {}, {}}; }
    std::string render() const override {
        return "ZeroR predicts class value: " + std::string(class_rule_name(m_.majority)) + "\n";
    }
    std::string to_json() const override {
        json j{{"learner", "zeror"}, {"class", class_code(m_.majority)}, {"proportion", m_.proportion},
               {"counts", counts_json(m_.counts)}};
        return j.dump(2) + "\n";
    }

private:
    ZeroRModel m_;
};

class OneRWrapper final : public Model {
public:
    explicit OneRWrapper(OneRModel m) : m_(std::move(m)) {}
    UsageClass predict(std::span<const double> x) const override { return oner_predict(m_, x); }
    ModelInfo info() const override {
        return {"oner", "attribute=" + m_.attribute_name + " rules=" + std::to_string(rule_count()), {}, {}};
    }
    std::string render() const override { return render_oner(m_); }
    std::string to_json() const override {
        json rules = json::array();
        if (m_.numeric) {
            for (const auto& r : m_.intervals) {
                json rule{{"class", class_rule_name(r.cls)}};
                if (std::isfinite(r.upper)) rule["below"] = r.upper;
                rules.push_back(rule);
            }
        } else {
            for (std::size_t v = 0; v < m_.value_classes.size(); ++v) {
                rules.push_back({{"value", m_.value_names[v]}, {"class", class_rule_name(m_.value_classes[v])}});
            }
        }
        json j{{"learner", "oner"},       {"attribute", m_.attribute_name}, {"numeric", m_.numeric},
               {"rules", rules},          {"correct", m_.correct},          {"total", m_.total},
               {"text", render_oner(m_)}};
        return j.dump(2) + "\n";
    }

private:
    std::size_t rule_count() const { return m_.numeric ? m_.intervals.size() : m_.value_classes.size(); }
    OneRModel m_;
};

class NaiveBayesWrapper final : public Model {
public:
    NaiveBayesWrapper(NaiveBayesModel m, std::vector<Attribute> schema) : m_(std::move(m)), schema_(std::move(schema)) {}
    UsageClass predict(std::span<const double> x) const override { return nb_predict(m_, x).cls; }
    ModelInfo info() const override {
        return {"nb", m_.mode == NaiveBayesMode::Gaussian ? "mode=gaussian" : "mode=binned", {}, {}};
    }
    std::string render() const override {
        std::string out = "Class priors\n";
        for (std::size_t c = 0; c < kNumClasses; ++c) {
            if (m_.priors[c] > 0) {
                out += "  " + std::string(class_rule_name(class_from_index(c))) + " " +
                       csv::format_sig(m_.priors[c], 6) + "\n";
            }
        }
        for (std::size_t a = 0; a < schema_.size(); ++a) {
            const auto& attr = m_.attributes[a];
            if (attr.kind != NaiveBayesAttribute::Kind::Gaussian) continue;
            out += schema_[a].name + "\n";
            for (std::size_t c = 0; c < kNumClasses; ++c) {
                if (m_.priors[c] <= 0) continue;
                out += "  " + std::string(class_rule_name(class_from_index(c))) +
                       " mean " + csv::format_sig(attr.gaussian[c].mean, 6) +
                       " sd " + csv::format_sig(attr.gaussian[c].sd, 6) + "\n";
            }
        }
        return out;
    }
    std::string to_json() const override {
        json attrs = json::array();
        for (std::size_t a = 0; a < schema_.size(); ++a) {
            const auto& attr = m_.attributes[a];
            json ja{{"name", schema_[a].name}};
            if (attr.kind == NaiveBayesAttribute::Kind::Gaussian) {
                ja["kind"] = "gaussian";
                json per = json::object();
                for (std::size_t c = 0; c < kNumClasses; ++c) {
                    if (m_.priors[c] > 0) {
                        per[std::string(class_code(class_from_index(c)))] = {{"mean", attr.gaussian[c].mean},
                                                                             {"sd", attr.gaussian[c].sd}};
                    }
                }
                ja["classes"] = per;
            } else if (attr.kind == NaiveBayesAttribute::Kind::Nominal) {
                ja["kind"] = "nominal";
                json per = json::object();
                for (std::size_t c = 0; c < kNumClasses; ++c) {
                    if (m_.priors[c] > 0) per[std::string(class_code(class_from_index(c)))] = attr.log_prob[c];
                }
                ja["log_prob"] = per;
            } else {
                ja["kind"] = "ignored";
            }
            attrs.push_back(ja);
        }
        json priors = json::object();
        for (std::size_t c = 0; c < kNumClasses; ++c) priors[std::string(class_code(class_from_index(c)))] = m_.priors[c];
        json j{{"learner", "nb"},
               {"mode", m_.mode == NaiveBayesMode::Gaussian ? "gaussian" : "binned"},
               {"priors", priors},
               {"attributes", attrs}};
        return j.dump(2) + "\n";
    }

private:
    NaiveBayesModel m_;
    std::vector<Attribute> schema_;
};

class TreeWrapper final : public Model {
public:
    TreeWrapper(DecisionTree t, PruningOptions p) : t_(std::move(t)), p_(p) {}
    UsageClass predict(std::span<const double> x) const override { return tree_predict(t_, x); }
    ModelInfo info() const override {
        std::string detail = "pruning=" + std::string(pruning_name(p_.kind)) +
                             " criterion=" + (t_.gain_ratio ? "gain-ratio" : "gain");
        return {"tree", detail, t_.size(), t_.leaves()};
    }
    std::string render() const override { return render_tree(t_); }
    std::string to_json() const override { return tree_to_json(t_); }

private:
    DecisionTree t_;
    PruningOptions p_;
};

class ConfiguredLearner final : public Learner {
public:
    explicit ConfiguredLearner(LearnerConfig c) : c_(c) {}
    std::unique_ptr<Model> train(const Dataset& ds) const override {
        switch (c_.kind) {
            case LearnerKind::ZeroR: return std::make_unique<ZeroRWrapper>(train_zeror(ds));
            case LearnerKind::OneR: return std::make_unique<OneRWrapper>(train_oner(ds, c_.min_bucket));
            case LearnerKind::NaiveBayes:
                return std::make_unique<NaiveBayesWrapper>(train_naive_bayes(ds, c_.nb_mode, c_.nb_bins), ds.schema());
            case LearnerKind::Tree:
                return std::make_unique<TreeWrapper>(train_tree(ds, c_.tree, c_.pruning), c_.pruning);
        }
        throw SchemaError("unknown learner");
    }

private:
    LearnerConfig c_;
};

}  // namespace

std::unique_ptr<Learner> make_learner(const LearnerConfig& config) { return std::make_unique<ConfiguredLearner>(config); }

double accuracy_on(const Model& model, const Dataset& ds) {
    if (ds.empty()) return 0;
    std::size_t hit = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (model.predict(ds.row(i)) == ds.label(i)) ++hit;
    }
    return static_cast<double>(hit) / static_cast<double>(ds.size());
}

}  // namespace vgaml
