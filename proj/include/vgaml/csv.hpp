#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vgaml::csv {

using Row = std::vector<std::string>;

/// Splits CSV text into rows of fields. Handles double-quoted fields with
/// embedded commas, quotes ("") and newlines; accepts LF and CRLF. A UTF-8
/// BOM at the start is skipped. Blank lines are dropped.
std::vector<Row> parse(std::string_view text);

/// Quotes a field only when it contains a comma, quote or line break.
std::string escape(std::string_view field);

std::string join(const Row& fields);

/// Shortest text that parses back to exactly `value`.
std::string format_exact(double value);

/// `value` rounded to `digits` significant digits (printf "%.Ng").
std::string format_sig(double value, int digits);

/// Parses a complete decimal number; returns false on trailing garbage.
bool parse_double(std::string_view text, double& out);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace vgaml::csv
