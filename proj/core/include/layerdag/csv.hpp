#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layerdag {

/// Parses RFC-4180-style CSV: quoted fields may contain commas, quotes
/// (doubled) and newlines. Throws IoError with row context on malformed input.
[[nodiscard]] std::vector<std::vector<std::string>> parse_csv(std::istream& in,
                                                              const std::string& source_name);

[[nodiscard]] std::vector<std::vector<std::string>> read_csv_file(const std::string& path);

/// Quotes a field only when it contains a comma, quote, or newline.
[[nodiscard]] std::string csv_field(const std::string& value);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Shortest round-trip decimal form; deterministic for a given build.
[[nodiscard]] std::string format_double(double value);

}  // namespace layerdag
