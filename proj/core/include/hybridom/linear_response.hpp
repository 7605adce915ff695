#pragma once

#include <array>

#include "hybridom/params.hpp"
#include "hybridom/types.hpp"

namespace hybridom {

/// Drift matrix of the linearized Langevin equations, d/dt u = A u + u_in,
/// rows/cols ordered (X_a, P_a, X_b, P_b, X_d, P_d).
struct DriftMatrix {
  Mat6 entries;
};

/// True where the drift matrix can be nonzero (14 entries).
bool drift_structurally_nonzero(int i, int j);

DriftMatrix build_drift(const DimensionlessParams& d);

struct StabilityReport {
  std::array<Complex, 6> eigenvalues{};
  double max_real_part = 0.0;
  bool hurwitz = false;
  /// 1 - xi_m/xi_m_max from the collective-cooperativity bound; NaN when built from A alone.
  double margin_to_bound = 0.0;
};

/// Eigenvalues of A. Throws NumericalError (with the matrix in the message) if the
/// eigen solver does not converge.
StabilityReport stability_eigen(const DriftMatrix& A);

/// stability_eigen(build_drift(d)) plus the margin to the xi_m bound.
StabilityReport stability_report(const DimensionlessParams& d);

/// Smallest xi_m (others fixed) at which max Re eig(A) reaches zero, by bisection.
/// Searches [0, upper]; returns +inf if A stays Hurwitz up to `upper`.
double instability_onset_xi_m(const DimensionlessParams& d, double upper, double rel_tol = 1e-13);

/// Exact onset of the zero-frequency instability from det of the {P_a, X_b, X_d}
/// block: xi_m = 1 + C0 (1 - xi_d) / (1 + C1 - xi_d).
double exact_onset_xi_m(const DimensionlessParams& d);

struct SusceptibilityMatrix {
  CMat6 entries;
  double omega = 0.0;

  /// 1-based accessor matching chi_ij notation.
  Complex operator()(int i, int j) const { return entries(i - 1, j - 1); }
};

/// chi(w) = (-i w I - A)^{-1}. Throws PoleError when the resolvent is singular.
SusceptibilityMatrix susceptibility_numeric(const DriftMatrix& A, double omega);

/// Element-by-element closed forms for the 18 nonzero entries; structural zeros are exact.
/// Throws PoleError when a bare or composite denominator vanishes.
SusceptibilityMatrix susceptibility_closed(const DimensionlessParams& d, double omega);

/// Frequency-dependent parametric coefficient induced on the cavity by the modulated
/// mirror and condensate. Throws PoleError on a pole.
Complex induced_paramp_a(const DimensionlessParams& d, double omega);

struct CovarianceMatrix {
  Mat6 entries;  ///< symmetrized steady-state covariances
};

/// Diffusion matrix diag(kappa(n_a+1/2), kappa(n_a+1/2), gamma_m(n_m+1/2), ...).
Mat6 diffusion_matrix(const DimensionlessParams& d);

/// Solves A V + V A^T + D = 0 by vectorization. Throws NoSteadyState when A is not Hurwitz.
CovarianceMatrix steady_state_covariance(const DriftMatrix& A, const DimensionlessParams& d);

}  // namespace hybridom
