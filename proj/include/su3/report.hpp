#pragma once

// Byte-stable CSV and JSON emission.
//
// Floats are written with 17 significant digits ("%.17g"); non-finite values
// become the strings "inf", "-inf" and "nan". Files end with a newline, use LF
// line endings and are written to a temporary file that is renamed into place.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace su3 {

using Json = nlohmann::ordered_json;

std::string format_double(double x);

/// Compact JSON with the float format above and keys in insertion order.
std::string dump_json(const Json& j);
/// Same, one member per line with two-space indentation.
std::string dump_json_pretty(const Json& j);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// First line: "# su3char <command> config=<compact json>", then one header
/// row and the data rows. Throws Error(invalid_argument) without touching the
/// file system when the table has no rows.
void write_csv(const std::string& path, std::string_view command, const Json& config, const Table& table);
std::string render_csv(std::string_view command, const Json& config, const Table& table);

/// {"command": ..., "config": ..., "result": ...}
void write_json(const std::string& path, std::string_view command, const Json& config, const Json& result);
std::string render_json(std::string_view command, const Json& config, const Json& result);

/// Writes contents to path through a sibling temporary file.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace su3
