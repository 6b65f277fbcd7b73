#include "vgaml/run_config.hpp"

#include "vgaml/csv.hpp"
#include "vgaml/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace vgaml {

const std::vector<ConfigKey>& config_schema() {
    static const std::vector<ConfigKey> keys = {
        {"output", ConfigType::String, "output file or directory"},
        {"labelmap", ConfigType::String, "label mapping CSV replacing the built-in table"},
        {"plan-name", ConfigType::String, "ref prefix for measures rows"},
        {"corner-rule", ConfigType::String, "touch | pinch"},
        {"entropy-sign", ConfigType::String, "printed | divergence"},
        {"jobs", ConfigType::Integer, "worker threads"},
        {"preset", ConfigType::String, "full10 | subset8 | pca | explicit"},
        {"attributes", ConfigType::String, "comma-separated attribute names for the explicit preset"},
        {"pca-model", ConfigType::String, "PCA model JSON applied by the pca preset"},
        {"learner", ConfigType::String, "zeror | oner | nb | tree"},
        {"pruning", ConfigType::String, "none | rep | ebp"},
        {"min-leaf", ConfigType::Integer, "minimum instances per tree leaf"},
        {"min-bucket", ConfigType::Integer, "minimum instances per OneR interval"},
        {"confidence", ConfigType::Real, "error-based pruning confidence factor"},
        {"rep-folds", ConfigType::Integer, "reduced-error pruning fold count"},
        {"criterion", ConfigType::String, "gain | gain-ratio"},
        {"nb-mode", ConfigType::String, "gaussian | binned"},
        {"bins", ConfigType::Integer, "equal-width bin count"},
        {"folds", ConfigType::Integer, "cross-validation folds"},
        {"seed", ConfigType::Integer, "random seed"},
        {"dump-rules", ConfigType::Boolean, "print the OneR rule list"},
        {"variance", ConfigType::Real, "PCA variance target"},
        {"components", ConfigType::Integer, "PCA component count"},
        {"standardize", ConfigType::Boolean, "standardize attributes"},
        {"algo", ConfigType::String, "kmeans | som"},
        {"k", ConfigType::Integer, "cluster count"},
        {"grid", ConfigType::String, "SOM lattice WxH"},
        {"metric", ConfigType::String, "euclidean | manhattan"},
        {"max-iter", ConfigType::Integer, "k-means iteration cap"},
        {"epochs", ConfigType::Integer, "SOM epochs"},
        {"rate", ConfigType::Real, "SOM initial learning rate"},
        {"radius", ConfigType::Real, "SOM initial radius"},
        {"classes-to-clusters", ConfigType::Boolean, "evaluate clusters against classes"},
        {"strength", ConfigType::Real, "planted signal strength"},
        {"target", ConfigType::Integer, "open cell target of one layout"},
        {"layouts", ConfigType::String, "comma-separated open cell targets"},
        {"kind", ConfigType::String, "reference graph kind"},
    };
    return keys;
}

std::optional<bool> parse_bool(std::string_view t) {
    std::string s;
    for (char c : t) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
    if (s == "false" || s == "no" || s == "0" || s == "off") return false;
    return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool type_ok(ConfigType type, std::string_view v) {
    switch (type) {
        case ConfigType::String: return true;
        case ConfigType::Boolean: return parse_bool(v).has_value();
        case ConfigType::Real: {
            double d;
            return csv::parse_double(v, d);
        }
        case ConfigType::Integer: {
            long long i;
            const auto r = std::from_chars(v.data(), v.data() + v.size(), i);
            return r.ec == std::errc{} && r.ptr == v.data() + v.size();
        }
    }
    return false;
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text) {
    RunConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = std::string(trim(line.substr(0, eq)));
        const auto value = std::string(trim(line.substr(eq + 1)));
        const auto& schema = config_schema();
        const auto it = std::find_if(schema.begin(), schema.end(), [&](const ConfigKey& k) { return k.name == key; });
        if (it == schema.end()) throw SchemaError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        if (!type_ok(it->type, value)) {
            throw SchemaError("config line " + std::to_string(line_no) + ": bad value '" + value + "' for '" + key + "'");
        }
        if (!cfg.values_.emplace(key, value).second) {
            throw SchemaError("config line " + std::to_string(line_no) + ": repeated key '" + key + "'");
        }
    }
    return cfg;
}

RunConfig RunConfig::load(const std::string& path) { return parse(csv::read_file(path)); }

std::optional<std::string> RunConfig::get(std::string_view key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

}  // namespace vgaml
