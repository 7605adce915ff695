#pragma once

#include <array>

#include "hybridom/linear_response.hpp"
#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

/// s(w) = I - sqrt(Gamma) chi(w) sqrt(Gamma), Gamma = diag(kappa, kappa, gamma_m, gamma_m, gamma_d, gamma_d).
struct ScatteringMatrix {
  CMat6 entries;
  double omega = 0.0;

  Complex operator()(int i, int j) const { return entries(i - 1, j - 1); }
};

ScatteringMatrix scattering_matrix(const SusceptibilityMatrix& chi, const DimensionlessParams& rates);

/// Damping rate of the subsystem: kappa, gamma_m or gamma_d.
double decay_rate(const DimensionlessParams& d, Subsystem mode);

/// Bath occupancy of the subsystem.
double occupancy(const DimensionlessParams& d, Subsystem mode);

/// |s_jj(w)|^2 for the amplified quadrature j of `mode` (optical P, mech X, bog X).
double gain_spectrum(const ScatteringMatrix& s, Subsystem mode);

/// Zero-frequency amplitude gains sqrt(G_j) = Q_j / P_j (signed). P_j = 0 gives an
/// infinite entry. Q/P are the displayed numerator/denominator of each closed form.
struct OnResonanceGains {
  std::array<Extended, 3> sqrt_gain{Extended::finite(1), Extended::finite(1), Extended::finite(1)};
  std::array<double, 3> Q{};
  std::array<double, 3> P{};
  double xi_m_pole_a = 0.0;  ///< zero of P_a in xi_m (divergent optical gain)
  double xi_m_zero_a = 0.0;  ///< zero of Q_a in xi_m (vanishing optical gain); inf if none

  Extended sqrt_g(Subsystem m) const { return sqrt_gain[static_cast<std::size_t>(m)]; }
  /// Power gain G_j; infinite when sqrt_g is.
  Extended gain(Subsystem m) const;
};

/// Throws SingularConfiguration if xi_m or xi_d equals 1 (the closed forms divide by 1 - xi).
OnResonanceGains gain_on_resonance(const DimensionlessParams& d);

/// Amplifier-added noise referred to the input. Throws UndefinedAddedNoise when G(w) = 0.
double added_noise_spectrum(const SusceptibilityMatrix& chi, const DimensionlessParams& d, Subsystem mode);

/// On-resonance added noises; a vanishing Q_j (zero gain) yields an infinite entry.
std::array<Extended, 3> added_noise_on_resonance(const DimensionlessParams& d);

/// Symmetrized output spectrum of the amplified quadrature: sum_k (n_k + 1/2) |s_jk|^2.
double amplified_spectrum(const ScatteringMatrix& s, const DimensionlessParams& d, Subsystem mode);

/// Zero-frequency amplified spectra, G_j (n_j + 1/2) + G_j n_add,j, written without 1/Q so
/// they stay finite at zero gain. Infinite where the gain diverges.
std::array<Extended, 3> amplified_spectrum_on_resonance(const DimensionlessParams& d);

struct AmplifierPoint {
  Subsystem mode = Subsystem::Optical;
  Extended gain = Extended::finite(1);
  Extended added_noise = Extended::finite(0);
  Extended amplified_spectrum = Extended::finite(0.5);
};

/// All amplifier observables of one mode at one frequency. w = 0 uses the closed forms,
/// otherwise the susceptibility route. Throws PoleError / SingularConfiguration.
AmplifierPoint evaluate_amplifier(const DimensionlessParams& d, double omega, Subsystem mode);

/// 10 log10 G (power convention).
double gain_db(double gain);

}  // namespace hybridom
