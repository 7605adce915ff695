#include "hybridom/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hybridom/amplifier.hpp"
#include "hybridom/errors.hpp"
#include "hybridom/linear_response.hpp"

namespace hybridom {

CubicCoeffs cubic_coefficients(const DimensionlessParams& d) {
  const double k = d.kappa;
  const double gm = d.gamma_m;
  const double gd = d.gamma_d;
  const double gbar2 = gm * gd;
  const double xm = d.xi_m;
  const double xd = d.xi_d;
  CubicCoeffs c;
  c.a = -0.5 * (k + gm * (1.0 - xm) + gd * (1.0 - xd));
  c.b = 0.25 * (k * gm * (d.C0 + 1.0 - xm) + k * gd * (d.C1 + 1.0 - xd) + gbar2 * xm * xd);
  c.c = k * gbar2 / 8.0 * (d.C0 * (1.0 - xd) + d.C1 * (1.0 - xm) + 1.0 + xm * xd - xm - xd);
  return c;
}

BandwidthAnalytic gain_bandwidth_analytic(const DimensionlessParams& d) {
  if (d.C0 == 0.0) throw BandwidthUndefined("gain bandwidth undefined for C0 = 0");
  const OnResonanceGains gains = gain_on_resonance(d);
  const Extended r = gains.sqrt_g(Subsystem::Optical);
  if (r.is_finite() && r.value() == 0.0) throw BandwidthUndefined("gain bandwidth undefined: sqrt(G_a) = 0");
  const double inv_r = r.is_finite() ? 1.0 / r.value() : 0.0;

  const CubicCoeffs cc = cubic_coefficients(d);
  const double gm = d.gamma_m;
  const double gd = d.gamma_d;
  const double C0 = d.C0;
  const double C1 = d.C1;

  BandwidthAnalytic out;
  out.from_cubic = 2.0 * cc.b / (-cc.a);
  out.final_form = 2.0 * C0 * gm * (inv_r + C1 / (2.0 * C0) * (d.xi_m - 1.0) + (gd / gm) * (1.0 + C1) / (2.0 * C0));
  out.adiabatic_x = gm / d.kappa * (C0 + C1 * (1.0 - d.xi_m));
  out.intermediate = out.final_form / (1.0 - out.adiabatic_x);

  const double G = r.is_finite() ? r.value() * r.value() : std::numeric_limits<double>::infinity();
  out.regime.xi_d_zero = d.xi_d == 0.0;
  out.regime.large_gain = G > 100.0;
  out.regime.weak_coupling = d.g() < 0.1 * d.kappa && d.G() < 0.1 * d.kappa;
  out.regime.adiabatic = std::abs(out.adiabatic_x) < 0.1;
  return out;
}

double fwhm_numeric(const DimensionlessParams& d, Subsystem mode, const FwhmOptions& opt) {
  auto gain = [&](double w) { return gain_spectrum(scattering_matrix(susceptibility_closed(d, w), d), mode); };
  const double g0 = gain(0.0);
  if (!std::isfinite(g0) || g0 <= 0.0) throw BandwidthUndefined("gain at w = 0 is not finite and positive");
  const double half = 0.5 * g0;

  const double w_max = opt.window_kappa * d.kappa;
  const double w_min = 1e-9 * std::min({d.kappa, d.gamma_m, d.gamma_d});
  const int n = std::max(opt.grid_points, 2);
  const double step = std::log(w_max / w_min) / (n - 1);

  double lo = 0.0;
  for (int i = 0; i < n; ++i) {
    const double w = w_min * std::exp(step * i);
    if (gain(w) < half) {
      double hi = w;
      while (hi - lo > opt.rel_tol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (gain(mid) < half ? hi : lo) = mid;
      }
      return lo + hi;  // 2 * midpoint
    }
    lo = w;
  }
  throw BandwidthUndefined("no half-maximum crossing of the gain within the scan window");
}

BandwidthResult gain_bandwidth(const DimensionlessParams& d, const FwhmOptions& opt) {
  const BandwidthAnalytic a = gain_bandwidth_analytic(d);
  return BandwidthResult{a.final_form, fwhm_numeric(d, Subsystem::Optical, opt), a.regime};
}

}  // namespace hybridom
