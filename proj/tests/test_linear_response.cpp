#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "hybridom/errors.hpp"
#include "hybridom/linear_response.hpp"
#include "oracles.hpp"

using namespace hybridom;

namespace {

DimensionlessParams decoupled() {
  DimensionlessParams d;
  d.kappa = 100;
  d.gamma_m = 1;
  d.gamma_d = 2;
  return d;
}

// kappa = 100, gamma_m = gamma_d = 1, g = 5, G = 2.
DimensionlessParams sample_g5_G2() {
  DimensionlessParams d;
  d.kappa = 100;
  d.gamma_m = 1;
  d.gamma_d = 1;
  d.C0 = 4.0 * 25.0 / 100.0;
  d.C1 = 4.0 * 4.0 / 100.0;
  return d;
}

}  // namespace

TEST(BuildDrift, DecoupledIsDiagonalDamping) {
  const DimensionlessParams d = decoupled();
  const Mat6 A = build_drift(d).entries;
  Mat6 expected = Mat6::Zero();
  expected.diagonal() << -50, -50, -0.5, -0.5, -1, -1;
  EXPECT_EQ(A, expected);
}

TEST(BuildDrift, CouplingEntriesFollowTheLayout) {
  DimensionlessParams d = sample_g5_G2();
  const Mat6 A = build_drift(d).entries;
  EXPECT_NEAR(A(0, 3), -5.0, 1e-14);  // A[1,4] = -g
  EXPECT_NEAR(A(3, 0), 5.0, 1e-14);   // A[4,1] = g
  EXPECT_NEAR(A(0, 5), 2.0, 1e-14);
  EXPECT_NEAR(A(5, 0), -2.0, 1e-14);
  EXPECT_TRUE(A.isApprox(oracle::drift(d), 1e-15));
}

TEST(BuildDrift, HalfDampingParampZeroesTheXbDiagonal) {
  DimensionlessParams d = decoupled();
  d.xi_m = 1.0;  // lambda_m = gamma_m / 2
  EXPECT_EQ(build_drift(d).entries(2, 2), 0.0);
}

TEST(BuildDrift, SparsityPatternIsExact) {
  oracle::Draws draws(21);
  int nonzeros = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) nonzeros += drift_structurally_nonzero(i, j);
  EXPECT_EQ(nonzeros, 14);
  for (int k = 0; k < 50; ++k) {
    const Mat6 A = build_drift(draws.stable()).entries;
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (!drift_structurally_nonzero(i, j)) { EXPECT_EQ(A(i, j), 0.0) << i << "," << j; }
  }
}

TEST(BuildDrift, MatchesIndependentConstruction) {
  oracle::Draws draws(22);
  for (int k = 0; k < 100; ++k) {
    const DimensionlessParams d = draws.stable();
    EXPECT_TRUE(build_drift(d).entries.isApprox(oracle::drift(d), 1e-14));
  }
}

TEST(StabilityEigen, DecoupledEigenvaluesAreTheDiagonal) {
  const StabilityReport r = stability_eigen(build_drift(decoupled()));
  std::vector<double> re;
  for (Complex e : r.eigenvalues) {
    EXPECT_EQ(e.imag(), 0.0);
    re.push_back(e.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_EQ(re, (std::vector<double>{-50, -50, -1, -1, -0.5, -0.5}));
  EXPECT_TRUE(r.hurwitz);
  EXPECT_EQ(r.max_real_part, -0.5);
}

TEST(StabilityEigen, ThresholdAndBeyond) {
  DimensionlessParams d;
  d.kappa = 100;
  d.C0 = 100;
  d.C1 = 0;
  d.xi_m = collective_cooperativities(d).xi_m_max;
  ASSERT_DOUBLE_EQ(d.xi_m, 101.0);
  EXPECT_NEAR(stability_eigen(build_drift(d)).max_real_part, 0.0, 1e-8);
  d.xi_m *= 1.05;
  EXPECT_GT(stability_eigen(build_drift(d)).max_real_part, 0.0);
  EXPECT_FALSE(stability_eigen(build_drift(d)).hurwitz);
}

TEST(StabilityEigen, HurwitzFlagMatchesMaxRealPart) {
  oracle::Draws draws(23);
  for (int k = 0; k < 200; ++k) {
    DimensionlessParams d = draws.stable();
    d.xi_m *= draws.uniform(0.5, 3.0);
    const StabilityReport r = stability_report(d);
    EXPECT_EQ(r.hurwitz, r.max_real_part < 0.0);
    Eigen::EigenSolver<Mat6> es(oracle::drift(d), false);
    EXPECT_NEAR(r.max_real_part, es.eigenvalues().real().maxCoeff(), 1e-9 * d.kappa);
  }
}

TEST(StabilityEigen, NonFiniteMatrixReportsNumericalErrorWithMatrix) {
  DriftMatrix A{Mat6::Identity()};
  A.entries(0, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    stability_eigen(A);
    FAIL() << "expected NumericalError";
  } catch (const NumericalError& e) {
    EXPECT_NE(std::string(e.what()).find("nan"), std::string::npos);
  }
}

TEST(StabilityOnset, BisectionMatchesCeilingWithoutAtomicDrive) {
  oracle::Draws draws(24);
  for (int k = 0; k < 30; ++k) {
    DimensionlessParams d = draws.stable();
    d.xi_d = 0.0;
    d.kappa = 1e5;
    const double xmax = collective_cooperativities(d).xi_m_max;
    const double onset = instability_onset_xi_m(d, 2.0 * xmax);
    EXPECT_NEAR(onset / xmax, 1.0, 1e-6) << "C0=" << d.C0 << " C1=" << d.C1;
  }
}

TEST(StabilityOnset, ExactOnsetMatchesBisectionWithAtomicDrive) {
  oracle::Draws draws(25);
  for (int k = 0; k < 30; ++k) {
    DimensionlessParams d = draws.stable();
    d.kappa = 1e5;
    const double exact = exact_onset_xi_m(d);
    EXPECT_NEAR(instability_onset_xi_m(d, 4.0 * exact) / exact, 1.0, 1e-6);
  }
}

TEST(StabilityOnset, ReportsInfinityWhenStableThroughout) {
  DimensionlessParams d = decoupled();
  d.xi_m = 0;
  // The mirror alone goes unstable at xi_m = 1; below that upper bound nothing happens.
  EXPECT_TRUE(std::isinf(instability_onset_xi_m(d, 0.9)));
}

TEST(SusceptibilityNumeric, DecoupledAtZeroFrequency) {
  const DimensionlessParams d = decoupled();
  const SusceptibilityMatrix chi = susceptibility_numeric(build_drift(d), 0.0);
  EXPECT_NEAR(chi(1, 1).real(), 2.0 / d.kappa, 1e-16);
  EXPECT_EQ(chi(1, 1).imag(), 0.0);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) { EXPECT_EQ(chi.entries(i, j), Complex(0.0)); }
}

TEST(SusceptibilityNumeric, DecoupledCavityElement) {
  DimensionlessParams d = decoupled();
  for (double w : {-7.0, 0.5, 300.0}) {
    const SusceptibilityMatrix chi = susceptibility_numeric(build_drift(d), w);
    EXPECT_LT(oracle::rel(chi(1, 1), 1.0 / Complex(d.kappa / 2, -w)), 1e-14);
  }
}

TEST(SusceptibilityNumeric, ReflectionSymmetryAndStructuralZeros) {
  oracle::Draws draws(26);
  for (int k = 0; k < 50; ++k) {
    const DimensionlessParams d = draws.stable();
    const DriftMatrix A = build_drift(d);
    for (double w : {0.3, 17.0, 0.7 * d.kappa}) {
      const SusceptibilityMatrix p = susceptibility_numeric(A, w);
      const SusceptibilityMatrix m = susceptibility_numeric(A, -w);
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          EXPECT_LT(oracle::rel(m.entries(i, j), std::conj(p.entries(i, j))), 1e-12);
          if (!structurally_coupled(i, j)) { EXPECT_EQ(p.entries(i, j), Complex(0.0)); }
        }
      }
    }
  }
}

TEST(SusceptibilityNumeric, AgreesWithIndependentElimination) {
  oracle::Draws draws(27);
  for (int k = 0; k < 50; ++k) {
    const DimensionlessParams d = draws.stable();
    const double w = draws.uniform(-3.0, 3.0) * d.kappa;
    const CMat6 ref = oracle::resolvent(oracle::drift(d), w);
    const SusceptibilityMatrix chi = susceptibility_numeric(build_drift(d), w);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        if (structurally_coupled(i, j)) { EXPECT_LT(oracle::rel(chi.entries(i, j), ref(i, j)), 1e-9); }
  }
}

TEST(SusceptibilityNumeric, SingularResolventRaisesPoleWithFrequency) {
  DimensionlessParams d = decoupled();
  d.xi_m = 1.0;  // A[3,3] = 0: eigenvalue at the origin
  try {
    susceptibility_numeric(build_drift(d), 0.0);
    FAIL() << "expected PoleError";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.omega(), 0.0);
  }
}

TEST(SusceptibilityClosed, DecoupledReducesToBareSusceptibilities) {
  const DimensionlessParams d = decoupled();
  const double w = 0.8;
  const SusceptibilityMatrix chi = susceptibility_closed(d, w);
  EXPECT_LT(oracle::rel(chi(1, 1), 1.0 / Complex(50, -w)), 1e-15);
  EXPECT_LT(oracle::rel(chi(3, 3), 1.0 / Complex(0.5, -w)), 1e-15);
  EXPECT_LT(oracle::rel(chi(6, 6), 1.0 / Complex(1.0, -w)), 1e-15);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) { EXPECT_EQ(chi.entries(i, j), Complex(0.0)); }
}

TEST(SusceptibilityClosed, Chi14AtSamplePointMatchesResolvent) {
  const DimensionlessParams d = sample_g5_G2();
  const double w = 3.0;
  const Complex iw(0, w);
  const Complex inv0 = 50.0 - iw;
  const Complex invpm = 0.5 - iw;
  const Complex invpd = 0.5 - iw;
  const Complex expected = -5.0 / (inv0 * invpm + 25.0 + 4.0 * invpm / invpd);
  const SusceptibilityMatrix closed = susceptibility_closed(d, w);
  const CMat6 ref = oracle::resolvent(oracle::drift(d), w);
  EXPECT_LT(oracle::rel(closed(1, 4), expected), 1e-14);
  EXPECT_LT(oracle::rel(ref(0, 3), expected), 1e-12);
}

TEST(SusceptibilityClosed, BlockInversionReproducesChi11AndChi14) {
  // The block inverse of (-i w - A) on {X_a, P_b, P_d} yields
  // chi11 = [chi0^-1 + g^2 chi_+m + G^2 chi_+d]^-1 and chi14 = -g chi_+m chi11.
  oracle::Draws draws(28);
  for (int k = 0; k < 100; ++k) {
    const DimensionlessParams d = draws.stable();
    const double w = draws.uniform(-2.0, 2.0) * d.kappa;
    const Complex iw(0, w);
    const double g = std::sqrt(d.C0 * d.kappa * d.gamma_m / 4);
    const double G = std::sqrt(d.C1 * d.kappa * d.gamma_d / 4);
    const Complex chipm = 1.0 / (d.gamma_m / 2 + d.xi_m * d.gamma_m / 2 - iw);
    const Complex chipd = 1.0 / (d.gamma_d / 2 + d.xi_d * d.gamma_d / 2 - iw);
    const Complex chi11 = 1.0 / (d.kappa / 2 - iw + g * g * chipm + G * G * chipd);
    const Complex chi14 = -g * chipm * chi11;
    const CMat6 ref = oracle::resolvent(oracle::drift(d), w);
    EXPECT_LT(oracle::rel(ref(0, 0), chi11), 1e-9);
    EXPECT_LT(oracle::rel(ref(0, 3), chi14), 1e-9);
    const SusceptibilityMatrix closed = susceptibility_closed(d, w);
    EXPECT_LT(oracle::rel(closed(1, 1), chi11), 1e-10);
    EXPECT_LT(oracle::rel(closed(1, 4), chi14), 1e-10);
  }
}

TEST(SusceptibilityClosed, Chi35AtZeroFrequencyWithoutModulation) {
  const DimensionlessParams d = sample_g5_G2();
  const double g = 5, G = 2;
  const double expected = g * G / (50.0 * 0.5 * 0.5 + G * G * 0.5 + g * g * 0.5);
  const SusceptibilityMatrix closed = susceptibility_closed(d, 0.0);
  EXPECT_NEAR(closed(3, 5).real(), expected, 1e-15);
  EXPECT_NEAR(susceptibility_numeric(build_drift(d), 0.0)(3, 5).real(), expected, 1e-13);
  EXPECT_EQ(closed(3, 5), closed(5, 3));
}

TEST(SusceptibilityClosed, AgreesWithResolventOnRandomDraws) {
  oracle::Draws draws(29);
  for (int k = 0; k < 30; ++k) {
    const DimensionlessParams d = draws.stable();
    const DriftMatrix A = build_drift(d);
    for (int n = 0; n < 101; ++n) {
      const double w = -10.0 * d.kappa + 0.2 * d.kappa * n;
      const SusceptibilityMatrix a = susceptibility_closed(d, w);
      const SusceptibilityMatrix b = susceptibility_numeric(A, w);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) ASSERT_LT(oracle::rel(a.entries(i, j), b.entries(i, j)), 1e-9);
    }
  }
}

TEST(SusceptibilityClosed, ReflectionSymmetry) {
  oracle::Draws draws(30);
  for (int k = 0; k < 50; ++k) {
    const DimensionlessParams d = draws.stable();
    const double w = draws.uniform(0.0, 5.0) * d.kappa;
    const SusceptibilityMatrix p = susceptibility_closed(d, w);
    const SusceptibilityMatrix m = susceptibility_closed(d, -w);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) EXPECT_EQ(m.entries(i, j), std::conj(p.entries(i, j)));
  }
}

TEST(SusceptibilityClosed, PoleRaisesError) {
  DimensionlessParams d = decoupled();
  d.xi_m = 1.0;
  EXPECT_THROW(susceptibility_closed(d, 0.0), PoleError);
  EXPECT_NO_THROW(susceptibility_closed(d, 0.1));
}

TEST(InducedParamp, VanishesWithoutModulation) {
  DimensionlessParams d = sample_g5_G2();
  EXPECT_EQ(induced_paramp_a(d, 0.0), Complex(0.0));
  EXPECT_EQ(induced_paramp_a(d, 4.0), Complex(0.0));
}

TEST(InducedParamp, DirectEvaluation) {
  DimensionlessParams d;
  d.kappa = 4;  // g = 1 with C0 = 1
  d.C0 = 1;
  d.xi_m = 0.8;  // lambda_m = 0.4
  ASSERT_DOUBLE_EQ(d.g(), 1.0);
  const Complex v = induced_paramp_a(d, 0.0);
  EXPECT_NEAR(v.real(), 0.4 / (0.25 - 0.16), 1e-14);
  EXPECT_EQ(v.imag(), 0.0);
}

TEST(InducedParamp, DecaysAsInverseSquareFrequency) {
  DimensionlessParams d = sample_g5_G2();
  d.xi_m = 0.6;
  d.xi_d = 0.2;
  const double limit = d.g() * d.g() * d.lambda_m() + d.G() * d.G() * d.lambda_d();
  double prev_err = 1.0;
  for (double w : {1e3, 1e4, 1e5}) {
    const double scaled = std::abs(induced_paramp_a(d, w)) * w * w;
    const double err = std::abs(scaled / limit - 1.0);
    EXPECT_LT(err, prev_err);
    prev_err = err;
  }
  EXPECT_LT(prev_err, 1e-6);
}

TEST(InducedParamp, PoleRaisesError) {
  DimensionlessParams d = sample_g5_G2();
  d.xi_m = 1.0;  // (gamma_m/2)^2 = lambda_m^2
  EXPECT_THROW(induced_paramp_a(d, 0.0), PoleError);
}

TEST(Covariance, DecoupledVacuumIsHalfIdentity) {
  const DimensionlessParams d = decoupled();
  const CovarianceMatrix V = steady_state_covariance(build_drift(d), d);
  EXPECT_TRUE(V.entries.isApprox(0.5 * Mat6::Identity(), 1e-14));
}

TEST(Covariance, DecoupledThermalMirror) {
  DimensionlessParams d = decoupled();
  d.n_m = 100;
  const CovarianceMatrix V = steady_state_covariance(build_drift(d), d);
  EXPECT_NEAR(V.entries(2, 2), 100.5, 1e-11);
  EXPECT_NEAR(V.entries(3, 3), 100.5, 1e-11);
  EXPECT_NEAR(V.entries(0, 0), 0.5, 1e-14);
}

TEST(Covariance, NonHurwitzHasNoSteadyState) {
  DimensionlessParams d = decoupled();
  d.xi_m = 1.5;
  EXPECT_THROW(steady_state_covariance(build_drift(d), d), NoSteadyState);
}

TEST(Covariance, SatisfiesLyapunovAndUncertainty) {
  oracle::Draws draws(31);
  Mat6 omega = Mat6::Zero();
  for (int k = 0; k < 3; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  for (int k = 0; k < 50; ++k) {
    const DimensionlessParams d = draws.stable();
    const Mat6 A = build_drift(d).entries;
    const Mat6 V = steady_state_covariance(DriftMatrix{A}, d).entries;
    EXPECT_EQ(V, V.transpose());
    const Mat6 residual = A * V + V * A.transpose() + diffusion_matrix(d);
    EXPECT_LT(residual.cwiseAbs().maxCoeff(), 1e-8 * d.kappa * V.cwiseAbs().maxCoeff());
    const CMat6 H = V.cast<Complex>() + Complex(0, 0.5) * omega.cast<Complex>();
    Eigen::SelfAdjointEigenSolver<CMat6> es(H);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-9 * V.cwiseAbs().maxCoeff());
  }
}

TEST(Covariance, MatchesFrequencyIntegral) {
  oracle::Draws draws(32);
  for (int k = 0; k < 3; ++k) {
    DimensionlessParams d = draws.stable();
    d.kappa = 50;
    d.C0 = std::min(d.C0, 20.0);
    d.C1 = std::min(d.C1, 20.0);
    d.xi_m = 0.5 * exact_onset_xi_m(d);
    const Mat6 V = steady_state_covariance(build_drift(d), d).entries;
    const Mat6 W = oracle::covariance_by_quadrature(d);
    EXPECT_LT((V - W).cwiseAbs().maxCoeff(), 1e-4) << "C0=" << d.C0 << " C1=" << d.C1;
  }
}
