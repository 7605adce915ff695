#pragma once

#include <array>

#include "hybridom/linear_response.hpp"
#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

/// Symmetrized output spectrum of the squeezed quadrature (optical X, mech P, bog P).
double squeezing_spectrum(const SusceptibilityMatrix& chi, const DimensionlessParams& d, Subsystem mode);

struct EtaFactors {
  double eta_a = 0.0;
  double eta_m = 0.0;
  double eta_d = 0.0;
  double s_m = 0.0;
  double s_d = 0.0;
};

EtaFactors eta_s_factors(const DimensionlessParams& d);

/// Zero-frequency squeezed spectra (optical, mech, bog). Throws SingularConfiguration
/// when eta_a, s_m or s_d vanishes.
std::array<double, 3> squeezing_on_resonance(const DimensionlessParams& d);

/// S_XP = S_PX of the output mode. Exactly zero at w = 0.
double cross_correlation_spectrum(const SusceptibilityMatrix& chi, Subsystem mode, const DimensionlessParams& d);

/// n_eff = sqrt(S_XX S_PP - S_XP S_PX) - 1/2. A negative discriminant beyond a relative
/// tolerance throws UnphysicalSpectra; smaller negatives are clipped to zero.
double purity(double s_xx, double s_pp, double s_xp, double s_px);

/// -10 log10(2 S).
double squeezing_db(double spectrum);

/// A closed-form asymptotic value together with the operating point it assumes.
struct LimitEstimate {
  double value = 0.0;      ///< S / (1/2)
  double parameter = 0.0;  ///< the xi value the limit prescribes
  bool preconditions_met = false;
  bool within_stability_bound = false;

  bool applicable() const { return preconditions_met && within_stability_bound; }
};

struct AsymptoticLimits {
  double cavity_eta2 = 0.0;  ///< optical spectrum / (1/2) as eta_a -> 2 at the current xi
  LimitEstimate cavity;      ///< xi_d = 0, xi_m = xi_m_sq; parameter is xi_m_sq
  LimitEstimate mech_case_i; ///< xi_d = 0, xi_m = 2 - xi_m_max; parameter is that xi_m
  LimitEstimate mech_case_ii;///< xi_m = 0; parameter is the prescribed xi_d
  /// xi_m_sq in the form [(1 + C1) xi_m_max - 2] / (1 - C1) with xi_m_max at xi_d = 0.
  double xi_m_sq_alt = 0.0;
};

AsymptoticLimits asymptotic_limits(const DimensionlessParams& d);

struct SqueezePoint {
  Subsystem mode = Subsystem::Optical;
  double spectrum = 0.5;
  double squeezing_db = 0.0;
  double cross_corr = 0.0;
  Extended n_eff = Extended::finite(0);  ///< infinite if the amplified quadrature diverges
};

/// Squeezer observables of one mode at one frequency (closed forms at w = 0).
SqueezePoint evaluate_squeezer(const DimensionlessParams& d, double omega, Subsystem mode);

}  // namespace hybridom
