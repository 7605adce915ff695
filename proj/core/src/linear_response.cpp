#include "hybridom/linear_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "hybridom/errors.hpp"

namespace hybridom {
namespace {

constexpr Complex I{0.0, 1.0};

// Relative size below which a composite denominator counts as a pole.
constexpr double kPoleRelTol = 1e-13;

Complex checked_inverse(Complex den, double scale, double omega, const char* what) {
  if (den == Complex{} || std::abs(den) <= kPoleRelTol * scale) {
    throw PoleError(omega, std::string("susceptibility pole: ") + what + " vanishes");
  }
  return 1.0 / den;
}

}  // namespace

bool drift_structurally_nonzero(int i, int j) {
  if (i == j) return true;
  if (!structurally_coupled(i, j)) return false;
  // Mirror and condensate only talk to the cavity.
  return subsystem_of(i) == Subsystem::Optical || subsystem_of(j) == Subsystem::Optical;
}

DriftMatrix build_drift(const DimensionlessParams& d) {
  validate(d);
  const double g = d.g();
  const double G = d.G();
  const double lm = d.lambda_m();
  const double ld = d.lambda_d();
  const double k2 = 0.5 * d.kappa;

  Mat6 A = Mat6::Zero();
  A(0, 0) = -k2;
  A(0, 3) = -g;
  A(0, 5) = G;
  A(1, 1) = -k2;
  A(1, 2) = g;
  A(1, 4) = -G;
  A(2, 1) = -g;
  A(2, 2) = lm - 0.5 * d.gamma_m;
  A(3, 0) = g;
  A(3, 3) = -(lm + 0.5 * d.gamma_m);
  A(4, 1) = G;
  A(4, 4) = ld - 0.5 * d.gamma_d;
  A(5, 0) = -G;
  A(5, 5) = -(ld + 0.5 * d.gamma_d);
  return DriftMatrix{A};
}

StabilityReport stability_eigen(const DriftMatrix& A) {
  Eigen::EigenSolver<Mat6> solver(A.entries, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success || !solver.eigenvalues().allFinite()) {
    std::ostringstream os;
    os << "eigenvalue solver failed for drift matrix\n" << A.entries;
    throw NumericalError(os.str());
  }
  StabilityReport r;
  r.max_real_part = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < 6; ++i) {
    r.eigenvalues[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    r.max_real_part = std::max(r.max_real_part, solver.eigenvalues()(i).real());
  }
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  r.hurwitz = r.max_real_part < 0.0;
  r.margin_to_bound = std::numeric_limits<double>::quiet_NaN();
  return r;
}

StabilityReport stability_report(const DimensionlessParams& d) {
  StabilityReport r = stability_eigen(build_drift(d));
  const MarginReport m = validate_stability_inputs(d, d.xi_m, d.xi_d);
  r.margin_to_bound = m.mech.margin;
  return r;
}

double instability_onset_xi_m(const DimensionlessParams& d, double upper, double rel_tol) {
  auto unstable = [&](double xi) {
    DimensionlessParams p = d;
    p.xi_m = xi;
    return !stability_eigen(build_drift(p)).hurwitz;
  };
  if (unstable(0.0)) return 0.0;
  if (!unstable(upper)) return std::numeric_limits<double>::infinity();
  double lo = 0.0;
  double hi = upper;
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (unstable(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double exact_onset_xi_m(const DimensionlessParams& d) {
  const double den = 1.0 + d.C1 - d.xi_d;
  if (den == 0.0) throw SingularConfiguration("exact onset: 1 + C1 - xi_d vanishes");
  return 1.0 + d.C0 * (1.0 - d.xi_d) / den;
}

SusceptibilityMatrix susceptibility_numeric(const DriftMatrix& A, double omega) {
  const CMat6 M = -I * omega * CMat6::Identity() - A.entries.cast<Complex>();
  Eigen::FullPivLU<CMat6> lu(M);
  const double rcond_floor = 64.0 * std::numeric_limits<double>::epsilon();
  if (!lu.isInvertible() || lu.rcond() < rcond_floor) {
    throw PoleError(omega, "resolvent (-i w I - A) is singular");
  }
  SusceptibilityMatrix chi{lu.inverse(), omega};
  // Quadratures in different RWA blocks never mix; drop round-off fill-in.
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (!structurally_coupled(i, j)) chi.entries(i, j) = Complex{};
  return chi;
}

SusceptibilityMatrix susceptibility_closed(const DimensionlessParams& d, double omega) {
  validate(d);
  const double g = d.g();
  const double G = d.G();
  const double g2 = g * g;
  const double G2 = G * G;
  const double lm = d.lambda_m();
  const double ld = d.lambda_d();
  const Complex iw = I * omega;

  // Inverse bare susceptibilities.
  const Complex c0 = 0.5 * d.kappa - iw;
  const Complex cpm = 0.5 * d.gamma_m + lm - iw;
  const Complex cmm = 0.5 * d.gamma_m - lm - iw;
  const Complex cpd = 0.5 * d.gamma_d + ld - iw;
  const Complex cmd = 0.5 * d.gamma_d - ld - iw;

  auto bare = [&](Complex x, const char* name) {
    if (x == Complex{}) throw PoleError(omega, std::string("bare susceptibility ") + name + " diverges");
    return x;
  };
  bare(c0, "chi_0");
  bare(cpm, "chi_+m");
  bare(cmm, "chi_-m");
  bare(cpd, "chi_+d");
  bare(cmd, "chi_-d");

  auto inv = [&](std::initializer_list<Complex> terms, const char* what) {
    Complex sum{};
    double scale = 0.0;
    for (Complex t : terms) {
      sum += t;
      scale += std::abs(t);
    }
    return checked_inverse(sum, scale, omega, what);
  };

  // Block {X_a, P_b, P_d} uses the + susceptibilities, {P_a, X_b, X_d} the - ones.
  const Complex r11 = inv({c0, g2 / cpm, G2 / cpd}, "chi_11 denominator");
  const Complex r14 = inv({c0 * cpm, g2, G2 * cpm / cpd}, "chi_14 denominator");
  const Complex r16 = inv({c0 * cpd, G2, g2 * cpd / cpm}, "chi_16 denominator");
  const Complex r22 = inv({c0, g2 / cmm, G2 / cmd}, "chi_22 denominator");
  const Complex r23 = inv({c0 * cmm, g2, G2 * cmm / cmd}, "chi_23 denominator");
  const Complex r25 = inv({c0 * cmd, G2, g2 * cmd / cmm}, "chi_25 denominator");
  const Complex r33 = inv({cmm, g2 / c0, G2 * cmm / (c0 * cmd)}, "chi_33 denominator");
  const Complex r35 = inv({c0 * cmm * cmd, G2 * cmm, g2 * cmd}, "chi_35 denominator");
  const Complex r44 = inv({cpm, g2 / c0, G2 * cpm / (c0 * cpd)}, "chi_44 denominator");
  const Complex r46 = inv({c0 * cpm * cpd, G2 * cpm, g2 * cpd}, "chi_46 denominator");
  const Complex r55 = inv({cmd, G2 / c0, g2 * cmd / (c0 * cmm)}, "chi_55 denominator");
  const Complex r66 = inv({cpd, G2 / c0, g2 * cpd / (c0 * cpm)}, "chi_66 denominator");

  CMat6 chi = CMat6::Zero();
  auto set = [&chi](int i, int j, Complex v) { chi(i - 1, j - 1) = v; };
  set(1, 1, r11);
  set(1, 4, -g * r14);
  set(1, 6, G * r16);
  set(2, 2, r22);
  set(2, 3, g * r23);
  set(2, 5, -G * r25);
  set(3, 2, -g * r23);
  set(3, 3, (1.0 + G2 / (c0 * cmd)) * r33);
  set(3, 5, g * G * r35);
  set(4, 1, g * r14);
  set(4, 4, (1.0 + G2 / (c0 * cpd)) * r44);
  set(4, 6, g * G * r46);
  set(5, 2, G * r25);
  set(5, 3, g * G * r35);
  set(5, 5, (1.0 + g2 / (c0 * cmm)) * r55);
  set(6, 1, -G * r16);
  set(6, 4, g * G * r46);
  set(6, 6, (1.0 + g2 / (c0 * cpm)) * r66);
  return SusceptibilityMatrix{chi, omega};
}

Complex induced_paramp_a(const DimensionlessParams& d, double omega) {
  const Complex iw = I * omega;
  const double lm = d.lambda_m();
  const double ld = d.lambda_d();
  const Complex am = 0.5 * d.gamma_m - iw;
  const Complex ad = 0.5 * d.gamma_d - iw;
  const Complex den_m = am * am - lm * lm;
  const Complex den_d = ad * ad - ld * ld;
  const double g2 = d.g() * d.g();
  const double G2 = d.G() * d.G();
  Complex out{};
  if (lm != 0.0) out += g2 * lm * checked_inverse(den_m, std::norm(am) + lm * lm, omega, "mechanical paramp denominator");
  if (ld != 0.0) out += G2 * ld * checked_inverse(den_d, std::norm(ad) + ld * ld, omega, "atomic paramp denominator");
  return out;
}

Mat6 diffusion_matrix(const DimensionlessParams& d) {
  Mat6 D = Mat6::Zero();
  D(0, 0) = D(1, 1) = d.kappa * (d.n_a + 0.5);
  D(2, 2) = D(3, 3) = d.gamma_m * (d.n_m + 0.5);
  D(4, 4) = D(5, 5) = d.gamma_d * (d.n_d + 0.5);
  return D;
}

CovarianceMatrix steady_state_covariance(const DriftMatrix& A, const DimensionlessParams& d) {
  const StabilityReport st = stability_eigen(A);
  if (!st.hurwitz) {
    std::ostringstream os;
    os << "drift matrix is not Hurwitz (max Re eig = " << st.max_real_part << ")";
    throw NoSteadyState(os.str());
  }
  // vec(A V + V A^T) = (I (x) A + A (x) I) vec(V), column-major vec.
  using Mat36 = Eigen::Matrix<double, 36, 36>;
  using Vec36 = Eigen::Matrix<double, 36, 1>;
  Mat36 K = Mat36::Zero();
  const Mat6 Id = Mat6::Identity();
  for (int bi = 0; bi < 6; ++bi) {
    for (int bj = 0; bj < 6; ++bj) {
      K.block<6, 6>(6 * bi, 6 * bj) = Id(bi, bj) * A.entries + A.entries(bi, bj) * Id;
    }
  }
  const Mat6 D = diffusion_matrix(d);
  const Vec36 rhs = -Eigen::Map<const Vec36>(D.data());
  const Vec36 v = K.fullPivLu().solve(rhs);
  Mat6 V = Eigen::Map<const Mat6>(v.data());
  V = 0.5 * (V + V.transpose()).eval();
  return CovarianceMatrix{V};
}

}  // namespace hybridom
