#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

/// Prescriptions that pin a modulation amplitude to a special operating point.
enum class XiRule {
  MechSqueezeCaseI,   ///< xi_m = 2 - xi_m_max (xi_d = 0 bound)
  MechSqueezeCaseII,  ///< xi_d = (C1 + 1 - C0) / (C0 - 1)
  OpticalSqueezeMax,  ///< xi_m = C0 / (1 - C1) - 1, where eta_a = 2
};

std::string_view to_string(XiRule r);
std::optional<XiRule> parse_xi_rule(std::string_view text);

/// Partial parameter assignment. Layers (base, series, axis) are merged in order; a layer
/// that sets any form of xi_m (raw, ratio, rule) replaces every earlier form, likewise xi_d.
struct ParamLayer {
  std::optional<double> C0, C1, xi_m, xi_d, xi_m_ratio, xi_d_ratio;
  std::optional<XiRule> xi_m_rule, xi_d_rule;
  std::optional<double> kappa, gamma_m, gamma_d, n_a, n_m, n_d;

  /// Sets a numeric key by name; returns false for unknown names.
  bool set(std::string_view key, double value);
  void merge(const ParamLayer& over);
  /// Compact "key=value, ..." rendering in a fixed key order.
  std::string describe() const;
};

/// Names accepted by ParamLayer::set, in canonical order.
const std::vector<std::string>& numeric_param_keys();

enum class AxisScale { Linear, Log };

struct SweepAxis {
  std::string name;  ///< a numeric parameter key or "omega"
  double from = 0.0;
  double to = 1.0;
  int points = 2;
  AxisScale scale = AxisScale::Linear;

  std::vector<double> values() const;
};

enum class ObservableKind {
  Gain,
  AddedNoise,
  AmplifiedSpectrum,
  Squeezing,
  Purity,
  CrossCorrelation,
  Bandwidth,
  Stability,
};

struct Observable {
  ObservableKind kind = ObservableKind::Gain;
  Subsystem mode = Subsystem::Optical;  ///< ignored for Stability

  /// "gain:optical", "stability", ...
  std::string to_string() const;
};

/// Parses "kind:mode" (or "stability"). Returns nullopt on unknown kind/mode.
std::optional<Observable> parse_observable(std::string_view text);

struct Series {
  std::string label;
  ParamLayer params;
};

struct SweepConfig {
  std::string name;
  std::string description;
  ParamLayer base;
  std::optional<SweepAxis> axis;  ///< absent: single-point evaluation
  double omega = 0.0;
  std::vector<Series> series;     ///< never empty after loading
  std::vector<Observable> observables;
};

/// Parses a YAML sweep configuration. `origin` names the source in error messages.
/// Throws ConfigError with line/column for syntax errors, unknown keys and schema violations.
SweepConfig parse_config(std::string_view text, const std::string& origin = "<config>");

/// Reads and parses a file. Throws IoError if it cannot be read.
SweepConfig load_config(const std::filesystem::path& path);

/// Resolves the layered parameters to a concrete point. Ratios and rules are evaluated
/// against the collective bounds; xi_d first (at the raw xi_m or 0), then xi_m.
/// Throws InvalidParameter for missing/invalid values and SingularConfiguration when a
/// rule's preconditions fail.
DimensionlessParams resolve(const ParamLayer& layer);

}  // namespace hybridom
