#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hybridom/config.hpp"

namespace hybridom {

/// Non-numeric cell outcomes. Emitted as "inf", "unstable", "pole", "undefined".
enum class Sentinel { Infinite, Unstable, Pole, Undefined };

std::string_view to_string(Sentinel s);
std::optional<Sentinel> parse_sentinel(std::string_view text);

using Cell = std::variant<double, Sentinel>;

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kSqueezingConvention = "-10*log10(2*S)";
inline constexpr std::string_view kGainConvention = "10*log10(G)";

std::string_view library_version();

struct SweepMetadata {
  std::string name;
  std::string description;
  std::string version;
  int schema_version = kSchemaVersion;
  std::string squeezing_db_convention{kSqueezingConvention};
  std::string gain_db_convention{kGainConvention};
  std::string axis;        ///< "name from to points scale" or "" for a single point
  double omega = 0.0;
  std::string base;        ///< ParamLayer::describe() of the base layer
  std::vector<std::pair<std::string, std::string>> series;  ///< label, definition
};

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  SweepMetadata metadata;
};

/// Column names for a configuration, in emission order. The first is the axis name
/// (or "point"); observable columns are "[label:]name[:mode]".
std::vector<std::string> sweep_columns(const SweepConfig& cfg);

/// Evaluates every observable at every point for every series. Points run concurrently;
/// per-point failures become sentinels. Output is deterministic.
SweepResult run_sweep(const SweepConfig& cfg);

}  // namespace hybridom
