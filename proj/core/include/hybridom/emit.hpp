#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hybridom/sweep.hpp"

namespace hybridom {

enum class Format { Csv, Json };

std::optional<Format> parse_format(std::string_view text);

/// CSV: '#'-prefixed metadata lines, a header row, then one row per point. Numbers use the
/// shortest round-trip representation; sentinels are written as their literal names.
std::string to_csv(const SweepResult& r);

/// JSON object {schema_version, metadata, columns, rows}; sentinels are strings.
std::string to_json(const SweepResult& r);

/// Reads the output of to_json back. Throws ConfigError on malformed input.
SweepResult from_json(std::string_view text);

/// Writes the formatted result to `path`. Throws IoError naming the path.
void emit(const SweepResult& r, Format format, const std::filesystem::path& path);

}  // namespace hybridom
