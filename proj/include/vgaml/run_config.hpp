#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vgaml {

enum class ConfigType { String, Integer, Real, Boolean };

struct ConfigKey {
    std::string name;
    ConfigType type;
    std::string help;
};

/// Every accepted key. Keys match the long command-line flags.
const std::vector<ConfigKey>& config_schema();

/// Flat "key = value" settings. Blank lines and lines starting with '#' are
/// ignored.
class RunConfig {
public:
    /// Throws ParseError on a line without '=', SchemaError on unknown or
    /// repeated keys and on values that do not match the key's type.
    static RunConfig parse(std::string_view text);
    static RunConfig load(const std::string& path);

    std::optional<std::string> get(std::string_view key) const;
    const std::map<std::string, std::string, std::less<>>& values() const { return values_; }

private:
    std::map<std::string, std::string, std::less<>> values_;
};

/// Canonical spelling of a boolean value ("true"/"false"); nullopt if the
/// text is not one of true/false/yes/no/1/0/on/off.
std::optional<bool> parse_bool(std::string_view text);

}  // namespace vgaml
