#pragma once

#include <string>
#include <vector>

namespace hybridom {

/// Laboratory-unit description of the system. Rates are angular frequencies (rad/s);
/// the paramp amplitudes are taken real and non-negative (modulation phases absorbed).
struct PhysicalParams {
  double kappa = 0.0;     ///< cavity decay
  double gamma_m = 0.0;   ///< mechanical damping
  double gamma_d = 0.0;   ///< Bogoliubov damping
  double g = 0.0;         ///< enhanced optomechanical coupling
  double G = 0.0;         ///< enhanced opto-atomic coupling
  double lambda_m = 0.0;  ///< mechanical paramp
  double lambda_d = 0.0;  ///< atomic paramp
  double n_a = 0.0;
  double n_m = 0.0;
  double n_d = 0.0;
};

/// Working parameter set. All rates are in units of the mechanical damping, so
/// gamma_m is 1 after derive_dimensionless(); the math stays general in gamma_m.
struct DimensionlessParams {
  double C0 = 0.0;       ///< optomechanical cooperativity 4g^2/(kappa gamma_m)
  double C1 = 0.0;       ///< opto-atomic cooperativity 4G^2/(kappa gamma_d)
  double xi_m = 0.0;     ///< 2 lambda_m / gamma_m
  double xi_d = 0.0;     ///< 2 lambda_d / gamma_d
  double kappa = 1.0e4;  ///< kappa / gamma_m
  double gamma_m = 1.0;
  double gamma_d = 1.0;  ///< gamma_d / gamma_m
  double n_a = 0.0;
  double n_m = 0.0;
  double n_d = 0.0;

  double g() const;
  double G() const;
  double lambda_m() const { return 0.5 * xi_m * gamma_m; }
  double lambda_d() const { return 0.5 * xi_d * gamma_d; }
};

/// Throws InvalidParameter naming the offending field.
void validate(const PhysicalParams& p);
void validate(const DimensionlessParams& d);

/// Human-readable notes for parameters outside the red-detuned weak-coupling regime
/// (g or G not below kappa). Formulas stay evaluable there, so these never throw.
std::vector<std::string> regime_warnings(const PhysicalParams& p);
std::vector<std::string> regime_warnings(const DimensionlessParams& d);

DimensionlessParams derive_dimensionless(const PhysicalParams& p);

/// Inverse of derive_dimensionless for a chosen mechanical damping (rad/s).
PhysicalParams to_physical(const DimensionlessParams& d, double gamma_m);

struct StabilityBounds {
  double C_m = 0.0;  ///< collective optomechanical cooperativity (depends on xi_d)
  double C_d = 0.0;  ///< collective opto-atomic cooperativity (depends on xi_m)
  double xi_m_max = 1.0;
  double xi_d_max = 1.0;
};

/// Collective cooperativities and modulation ceilings xi_max = 1 + C. Each bound is
/// evaluated at the other mode's current amplitude; no fixed point is solved.
/// Throws SingularConfiguration when a denominator vanishes.
StabilityBounds collective_cooperativities(const DimensionlessParams& d);

enum class BoundStatus { Stable, Marginal, Unstable };

struct ModeMargin {
  double ratio = 0.0;   ///< xi / xi_max
  double margin = 1.0;  ///< 1 - ratio
  BoundStatus status = BoundStatus::Stable;
};

struct MarginReport {
  StabilityBounds bounds;
  ModeMargin mech;
  ModeMargin bog;
};

/// Reports xi/xi_max for both modes at the requested amplitudes. Never throws for
/// singular bounds; the affected mode is reported Unstable with a NaN-free margin of -inf.
MarginReport validate_stability_inputs(const DimensionlessParams& d, double xi_m, double xi_d);

std::string_view to_string(BoundStatus s);

}  // namespace hybridom
