#pragma once

#include <string>
#include <vector>

#include "hybridom/config.hpp"
#include "hybridom/params.hpp"

namespace hybridom {

struct InvariantResult {
  std::string name;
  int checked = 0;
  int failures = 0;
  double worst = 0.0;  ///< largest observed deviation
  double tolerance = 0.0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct InvariantReport {
  std::vector<InvariantResult> results;
  int points = 0;           ///< parameter points examined
  int skipped_unstable = 0; ///< points skipped because A is not Hurwitz

  bool ok() const;
};

/// Cross-route consistency checks at one stable parameter point: closed vs numeric chi on
/// an omega grid, |s_jj(0)|^2 vs closed-form gains, added-noise and squeezing routes,
/// vanishing zero-frequency cross-correlations, n_eff >= 0, and the vacuum identity.
void check_point(const DimensionlessParams& d, InvariantReport& report);

/// Runs check_point over every (point, series) of a configuration.
InvariantReport check_invariants(const SweepConfig& cfg);

}  // namespace hybridom
