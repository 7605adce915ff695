#include "hybridom/squeezer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hybridom/amplifier.hpp"
#include "hybridom/errors.hpp"

namespace hybridom {

double squeezing_spectrum(const SusceptibilityMatrix& chi, const DimensionlessParams& d, Subsystem mode) {
  const double k = d.kappa;
  const double gm = d.gamma_m;
  const double gd = d.gamma_d;
  const double ta = 2.0 * d.n_a + 1.0;
  const double tm = 2.0 * d.n_m + 1.0;
  const double td = 2.0 * d.n_d + 1.0;
  double r = 0.0;
  switch (mode) {
    case Subsystem::Optical:
      r = ta * std::norm(1.0 - k * chi(1, 1)) + tm * k * gm * std::norm(chi(1, 4)) +
          td * k * gd * std::norm(chi(1, 6));
      break;
    case Subsystem::Mechanical:
      r = tm * std::norm(1.0 - gm * chi(4, 4)) + ta * k * gm * std::norm(chi(4, 1)) +
          td * gm * gd * std::norm(chi(4, 6));
      break;
    case Subsystem::Bogoliubov:
      r = td * std::norm(1.0 - gd * chi(6, 6)) + ta * k * gd * std::norm(chi(6, 1)) +
          tm * gm * gd * std::norm(chi(6, 4));
      break;
  }
  return 0.5 * r;
}

EtaFactors eta_s_factors(const DimensionlessParams& d) {
  const double C0 = d.C0;
  const double C1 = d.C1;
  const double xm = d.xi_m;
  const double xd = d.xi_d;
  EtaFactors f;
  f.eta_a = 1.0 + C0 / (1.0 + xm) + C1 / (1.0 + xd);
  f.eta_m = C0 + xm - 1.0 + C1 * (xm - 1.0) / (1.0 + xd);
  f.s_m = C0 + 1.0 + xm + C1 * (1.0 + xm) / (1.0 + xd);
  f.eta_d = C1 + xd - 1.0 + C0 * (xd - 1.0) / (1.0 + xm);
  f.s_d = C1 + 1.0 + xd + C0 * (1.0 + xd) / (1.0 + xm);
  return f;
}

std::array<double, 3> squeezing_on_resonance(const DimensionlessParams& d) {
  validate(d);
  const EtaFactors f = eta_s_factors(d);
  if (f.eta_a == 0.0 || f.s_m == 0.0 || f.s_d == 0.0) {
    throw SingularConfiguration("on-resonance squeezing: eta_a, s_m or s_d vanishes");
  }
  const double ta = 1.0 + 2.0 * d.n_a;
  const double tm = 1.0 + 2.0 * d.n_m;
  const double td = 1.0 + 2.0 * d.n_d;
  const double vm2 = (1.0 + d.xi_m) * (1.0 + d.xi_m);
  const double vd2 = (1.0 + d.xi_d) * (1.0 + d.xi_d);

  const double ea = 1.0 - 2.0 / f.eta_a;
  const double a = ta * ea * ea + (tm * 4.0 * d.C0 / vm2 + td * 4.0 * d.C1 / vd2) / (f.eta_a * f.eta_a);
  const double m = (tm * f.eta_m * f.eta_m + 4.0 * d.C0 * ta + 4.0 * d.C0 * d.C1 / vd2 * td) / (f.s_m * f.s_m);
  const double b = (td * f.eta_d * f.eta_d + 4.0 * d.C1 * ta + 4.0 * d.C1 * d.C0 / vm2 * tm) / (f.s_d * f.s_d);
  return {0.5 * a, 0.5 * m, 0.5 * b};
}

double cross_correlation_spectrum(const SusceptibilityMatrix& chi, Subsystem mode, const DimensionlessParams& d) {
  const double k = d.kappa;
  const double gm = d.gamma_m;
  const double gd = d.gamma_d;
  Complex z;
  switch (mode) {
    case Subsystem::Optical:
      z = (1.0 - k * chi(1, 1)) * std::conj(1.0 - k * chi(2, 2)) + k * gm * chi(2, 3) * std::conj(chi(1, 4)) +
          k * gd * chi(2, 5) * std::conj(chi(1, 6));
      break;
    case Subsystem::Mechanical:
      z = (1.0 - gm * chi(3, 3)) * std::conj(1.0 - gm * chi(4, 4)) + gm * k * chi(4, 1) * std::conj(chi(3, 2)) +
          gm * gd * chi(3, 5) * std::conj(chi(4, 6));
      break;
    case Subsystem::Bogoliubov:
      z = (1.0 - gd * chi(5, 5)) * std::conj(1.0 - gd * chi(6, 6)) + gd * k * chi(6, 1) * std::conj(chi(5, 2)) +
          gd * gm * chi(5, 3) * std::conj(chi(6, 4));
      break;
  }
  return -0.5 * z.imag();
}

double purity(double s_xx, double s_pp, double s_xp, double s_px) {
  const double diag = s_xx * s_pp;
  const double off = s_xp * s_px;
  const double disc = diag - off;
  const double tol = 1e-10 * (std::abs(diag) + std::abs(off));
  if (!(disc >= -tol)) {
    std::ostringstream os;
    os << "unphysical spectra: S_XX S_PP - S_XP S_PX = " << disc;
    throw UnphysicalSpectra(os.str());
  }
  return std::sqrt(std::max(disc, 0.0)) - 0.5;
}

double squeezing_db(double spectrum) { return 0.0 - 10.0 * std::log10(2.0 * spectrum); }

AsymptoticLimits asymptotic_limits(const DimensionlessParams& d) {
  const double C0 = d.C0;
  const double C1 = d.C1;
  const double ta = 1.0 + 2.0 * d.n_a;
  const double tm = 1.0 + 2.0 * d.n_m;
  const double td = 1.0 + 2.0 * d.n_d;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();

  AsymptoticLimits out;
  out.cavity_eta2 = tm * C0 / ((1.0 + d.xi_m) * (1.0 + d.xi_m)) + td * C1 / ((1.0 + d.xi_d) * (1.0 + d.xi_d));

  // Bounds with the other modulation switched off.
  const double xi_m_max0 = 1.0 + C0 / (1.0 + C1);
  const double xi_d_max0 = 1.0 + C1 / (1.0 + C0);

  // Cavity: eta_a = 2 at xi_d = 0.
  if (C1 != 1.0) {
    const double xs = C0 / (1.0 - C1) - 1.0;
    out.cavity.parameter = xs;
    out.cavity.value = C0 > 0.0 ? (1.0 - C1) * (1.0 - C1) * tm / C0 + C1 * td : nan;
    out.cavity.preconditions_met = C0 > 0.0 && xs >= 0.0;
    out.cavity.within_stability_bound = xs < xi_m_max0;
    out.xi_m_sq_alt = ((1.0 + C1) * xi_m_max0 - 2.0) / (1.0 - C1);
  } else {
    out.cavity.parameter = nan;
    out.cavity.value = nan;
    out.xi_m_sq_alt = nan;
  }

  // Mechanical case (i): eta_m = 0 with xi_d = 0.
  {
    const double xm = 2.0 - xi_m_max0;
    out.mech_case_i.parameter = xm;
    out.mech_case_i.value = C1 > 0.0 ? C0 / (C1 * C1) * ta + C0 / C1 * td : nan;
    out.mech_case_i.preconditions_met = C1 > 0.0 && xm >= 0.0;
    out.mech_case_i.within_stability_bound = xm < xi_m_max0;
  }

  // Mechanical case (ii): xi_m = 0, eta_m = 0 reached through the atomic modulation.
  {
    const bool pre = C0 > 1.0 && C1 > C0 - 1.0;
    const double xd = C0 != 1.0 ? (C1 + 1.0 - C0) / (C0 - 1.0) : nan;
    out.mech_case_ii.parameter = xd;
    out.mech_case_ii.value = (C0 > 0.0 && C1 > 0.0) ? ta / C0 + (C0 - 1.0) / C1 * td : nan;
    out.mech_case_ii.preconditions_met = pre;
    out.mech_case_ii.within_stability_bound = pre && xd < xi_d_max0;
  }
  return out;
}

SqueezePoint evaluate_squeezer(const DimensionlessParams& d, double omega, Subsystem mode) {
  SqueezePoint p;
  p.mode = mode;
  const auto i = static_cast<std::size_t>(mode);
  if (omega == 0.0) {
    p.spectrum = squeezing_on_resonance(d)[i];
    p.cross_corr = 0.0;
    const Extended amp = amplified_spectrum_on_resonance(d)[i];
    p.n_eff = amp.is_finite() ? Extended::finite(purity(p.spectrum, amp.value(), 0.0, 0.0)) : Extended::infinite();
  } else {
    const SusceptibilityMatrix chi = susceptibility_closed(d, omega);
    const ScatteringMatrix s = scattering_matrix(chi, d);
    p.spectrum = squeezing_spectrum(chi, d, mode);
    p.cross_corr = cross_correlation_spectrum(chi, mode, d);
    p.n_eff = Extended::finite(purity(p.spectrum, amplified_spectrum(s, d, mode), p.cross_corr, p.cross_corr));
  }
  p.squeezing_db = squeezing_db(p.spectrum);
  return p;
}

}  // namespace hybridom
