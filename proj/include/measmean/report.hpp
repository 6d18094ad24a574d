#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace measmean {

using Json = nlohmann::ordered_json;

/// 17 significant digits, '.' separator regardless of locale; non-finite
/// values become "nan" / "inf" / "-inf".
std::string format_number(double v);

/// JSON text with every floating value printed by format_number
/// (non-finite ones as null). Keys keep insertion order.
std::string dump_json(const Json& value, int indent = 2);

/// Header plus rows, comma separated, '\n' terminated.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& rows);

/// Writes to stdout, or to `path` through a temporary file in the same
/// directory that is renamed into place, so a failed run leaves no
/// partial file. Throws std::runtime_error on I/O failure.
void emit(const std::string& content, const std::optional<std::string>& path);

}  // namespace measmean
