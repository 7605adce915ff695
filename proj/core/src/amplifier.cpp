#include "hybridom/amplifier.hpp"

#include <cmath>
#include <limits>

#include "hybridom/errors.hpp"

namespace hybridom {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t at(Subsystem m) { return static_cast<std::size_t>(m); }

Extended ratio(double num, double den) {
  if (den == 0.0) return Extended::infinite();
  return Extended::finite(num / den);
}

void require_not_one(double xi, const char* name) {
  if (xi == 1.0) {
    throw SingularConfiguration(std::string("on-resonance closed form divides by 1 - ") + name);
  }
}

}  // namespace

ScatteringMatrix scattering_matrix(const SusceptibilityMatrix& chi, const DimensionlessParams& rates) {
  const std::array<double, 6> root{std::sqrt(rates.kappa),   std::sqrt(rates.kappa),
                                   std::sqrt(rates.gamma_m), std::sqrt(rates.gamma_m),
                                   std::sqrt(rates.gamma_d), std::sqrt(rates.gamma_d)};
  CMat6 s = -chi.entries;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) s(i, j) *= root[static_cast<std::size_t>(i)] * root[static_cast<std::size_t>(j)];
    s(i, i) += 1.0;
  }
  return ScatteringMatrix{s, chi.omega};
}

double decay_rate(const DimensionlessParams& d, Subsystem mode) {
  switch (mode) {
    case Subsystem::Optical: return d.kappa;
    case Subsystem::Mechanical: return d.gamma_m;
    case Subsystem::Bogoliubov: return d.gamma_d;
  }
  return 0.0;
}

double occupancy(const DimensionlessParams& d, Subsystem mode) {
  switch (mode) {
    case Subsystem::Optical: return d.n_a;
    case Subsystem::Mechanical: return d.n_m;
    case Subsystem::Bogoliubov: return d.n_d;
  }
  return 0.0;
}

double gain_spectrum(const ScatteringMatrix& s, Subsystem mode) {
  const int j = amplified_index(mode);
  return std::norm(s.entries(j, j));
}

Extended OnResonanceGains::gain(Subsystem m) const {
  const Extended r = sqrt_g(m);
  if (r.is_infinite()) return r;
  return Extended::finite(r.value() * r.value());
}

OnResonanceGains gain_on_resonance(const DimensionlessParams& d) {
  validate(d);
  require_not_one(d.xi_m, "xi_m");
  require_not_one(d.xi_d, "xi_d");
  const double C0 = d.C0;
  const double C1 = d.C1;
  const double um = 1.0 - d.xi_m;
  const double ud = 1.0 - d.xi_d;
  const double vm = 1.0 + d.xi_m;
  const double vd = 1.0 + d.xi_d;

  OnResonanceGains out;
  const double Pa = C0 + um + C1 * um / ud;
  const double Qa = C0 - um + C1 * um / ud;
  const double Qm = C0 - vm - C1 * vm / ud;
  const double Pd = C1 + ud + C0 * ud / um;
  const double Qd = C1 - vd - C0 * vd / um;

  out.P = {Pa, Pa, Pd};
  out.Q = {Qa, Qm, Qd};
  out.sqrt_gain = {ratio(Qa, Pa), ratio(Qm, Pa), ratio(Qd, Pd)};
  out.xi_m_pole_a = 1.0 + C0 * ud / (C1 + ud);
  const double zden = C1 - ud;
  out.xi_m_zero_a = zden == 0.0 ? kInf : 1.0 + C0 * ud / zden;
  return out;
}

double added_noise_spectrum(const SusceptibilityMatrix& chi, const DimensionlessParams& d, Subsystem mode) {
  const double k = d.kappa;
  const double gm = d.gamma_m;
  const double gd = d.gamma_d;
  double G = 0.0;
  double bath = 0.0;
  switch (mode) {
    case Subsystem::Optical:
      G = std::norm(1.0 - k * chi(2, 2));
      bath = k * ((d.n_m + 0.5) * gm * std::norm(chi(2, 3)) + (d.n_d + 0.5) * gd * std::norm(chi(2, 5)));
      break;
    case Subsystem::Mechanical:
      G = std::norm(1.0 - gm * chi(3, 3));
      bath = gm * ((d.n_a + 0.5) * k * std::norm(chi(3, 2)) + (d.n_d + 0.5) * gd * std::norm(chi(3, 5)));
      break;
    case Subsystem::Bogoliubov:
      G = std::norm(1.0 - gd * chi(5, 5));
      bath = gd * ((d.n_a + 0.5) * k * std::norm(chi(5, 2)) + (d.n_m + 0.5) * gm * std::norm(chi(5, 3)));
      break;
  }
  if (!(G > 0.0)) throw UndefinedAddedNoise("added noise undefined: gain vanishes");
  return bath / G;
}

std::array<Extended, 3> added_noise_on_resonance(const DimensionlessParams& d) {
  const OnResonanceGains gains = gain_on_resonance(d);
  const double um = 1.0 - d.xi_m;
  const double ud = 1.0 - d.xi_d;
  const double na = d.n_a + 0.5;
  const double nm = d.n_m + 0.5;
  const double nd = d.n_d + 0.5;

  std::array<Extended, 3> out{Extended::infinite(), Extended::infinite(), Extended::infinite()};

  const Extended ra = gains.sqrt_g(Subsystem::Optical);
  const double bath_a = nm * d.C0 / (um * um) + nd * d.C1 / (ud * ud);
  if (ra.is_infinite()) {
    out[0] = Extended::finite(bath_a);
  } else if (ra.value() != 0.0) {
    const double f = 1.0 - 1.0 / ra.value();
    out[0] = Extended::finite(f * f * bath_a);
  }

  const double Qm = gains.Q[at(Subsystem::Mechanical)];
  if (Qm != 0.0) out[1] = Extended::finite(4.0 * d.C0 / (Qm * Qm) * (na + nd * d.C1 / (ud * ud)));

  const double Qd = gains.Q[at(Subsystem::Bogoliubov)];
  if (Qd != 0.0) out[2] = Extended::finite(4.0 * d.C1 / (Qd * Qd) * (na + nm * d.C0 / (um * um)));
  return out;
}

double amplified_spectrum(const ScatteringMatrix& s, const DimensionlessParams& d, Subsystem mode) {
  const int j = amplified_index(mode);
  double out = 0.0;
  for (int k = 0; k < 6; ++k) out += (occupancy(d, subsystem_of(k)) + 0.5) * std::norm(s.entries(j, k));
  return out;
}

std::array<Extended, 3> amplified_spectrum_on_resonance(const DimensionlessParams& d) {
  const OnResonanceGains gains = gain_on_resonance(d);
  const double um = 1.0 - d.xi_m;
  const double ud = 1.0 - d.xi_d;
  const double na = d.n_a + 0.5;
  const double nm = d.n_m + 0.5;
  const double nd = d.n_d + 0.5;
  std::array<Extended, 3> out{Extended::infinite(), Extended::infinite(), Extended::infinite()};

  const Extended ra = gains.sqrt_g(Subsystem::Optical);
  if (ra.is_finite()) {
    const double r = ra.value();
    const double bath = nm * d.C0 / (um * um) + nd * d.C1 / (ud * ud);
    out[0] = Extended::finite(r * r * na + (r - 1.0) * (r - 1.0) * bath);
  }
  const Extended rm = gains.sqrt_g(Subsystem::Mechanical);
  if (rm.is_finite()) {
    const double Pa = gains.P[at(Subsystem::Mechanical)];
    const double r = rm.value();
    out[1] = Extended::finite(r * r * nm + 4.0 * d.C0 / (Pa * Pa) * (na + nd * d.C1 / (ud * ud)));
  }
  const Extended rd = gains.sqrt_g(Subsystem::Bogoliubov);
  if (rd.is_finite()) {
    const double Pd = gains.P[at(Subsystem::Bogoliubov)];
    const double r = rd.value();
    out[2] = Extended::finite(r * r * nd + 4.0 * d.C1 / (Pd * Pd) * (na + nm * d.C0 / (um * um)));
  }
  return out;
}

AmplifierPoint evaluate_amplifier(const DimensionlessParams& d, double omega, Subsystem mode) {
  AmplifierPoint p;
  p.mode = mode;
  if (omega == 0.0) {
    const std::size_t i = at(mode);
    p.gain = gain_on_resonance(d).gain(mode);
    p.added_noise = added_noise_on_resonance(d)[i];
    p.amplified_spectrum = amplified_spectrum_on_resonance(d)[i];
    return p;
  }
  const SusceptibilityMatrix chi = susceptibility_closed(d, omega);
  const ScatteringMatrix s = scattering_matrix(chi, d);
  const double G = gain_spectrum(s, mode);
  p.gain = Extended::finite(G);
  p.added_noise = G > 0.0 ? Extended::finite(added_noise_spectrum(chi, d, mode)) : Extended::infinite();
  p.amplified_spectrum = Extended::finite(amplified_spectrum(s, d, mode));
  return p;
}

double gain_db(double gain) { return 10.0 * std::log10(gain); }

}  // namespace hybridom
