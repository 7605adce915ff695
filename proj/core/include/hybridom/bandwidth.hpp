#pragma once

#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

/// Coefficients of the cubic approximating the optical gain denominator near w = 0,
/// with gamma_bar^2 = gamma_m gamma_d. c vanishes at the xi_m instability threshold.
struct CubicCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

CubicCoeffs cubic_coefficients(const DimensionlessParams& d);

struct BandwidthRegime {
  bool xi_d_zero = false;      ///< no atomic modulation
  bool large_gain = false;     ///< G_a(0) > 100
  bool weak_coupling = false;  ///< g, G < kappa / 10
  bool adiabatic = false;      ///< (gamma_m/kappa)[C0 + C1(1 - xi_m)] < 0.1

  bool valid() const { return xi_d_zero && large_gain && weak_coupling; }
};

/// Three successively simplified estimates of the optical gain bandwidth.
struct BandwidthAnalytic {
  double from_cubic = 0.0;     ///< 2b / (-a)
  double intermediate = 0.0;   ///< keeps the 1/(1 - x) adiabatic correction
  double final_form = 0.0;     ///< (8 g^2 / kappa)[1/sqrt(G_a) + ...]
  double adiabatic_x = 0.0;    ///< x = (gamma_m/kappa)[C0 + C1(1 - xi_m)]
  BandwidthRegime regime;
};

/// Throws BandwidthUndefined when sqrt(G_a) = 0 or C0 = 0, SingularConfiguration as
/// gain_on_resonance does.
BandwidthAnalytic gain_bandwidth_analytic(const DimensionlessParams& d);

struct FwhmOptions {
  int grid_points = 4096;
  double rel_tol = 1e-10;
  double window_kappa = 10.0;  ///< scan out to window_kappa * kappa
};

/// Full width at half maximum of |s_jj(w)|^2 about w = 0 for the amplified quadrature of
/// `mode`: log-spaced bracketing scan, then bisection. Throws BandwidthUndefined when no
/// half-maximum crossing exists in the window.
double fwhm_numeric(const DimensionlessParams& d, Subsystem mode = Subsystem::Optical, const FwhmOptions& opt = {});

struct BandwidthResult {
  double analytic = 0.0;
  double numeric = 0.0;
  BandwidthRegime regime;
};

BandwidthResult gain_bandwidth(const DimensionlessParams& d, const FwhmOptions& opt = {});

}  // namespace hybridom
