#include <benchmark/benchmark.h>

#include "hybridom/amplifier.hpp"
#include "hybridom/linear_response.hpp"
#include "hybridom/squeezer.hpp"

namespace {

hybridom::DimensionlessParams sample() {
  hybridom::DimensionlessParams d;
  d.C0 = 100;
  d.C1 = 10;
  d.xi_m = 5;
  d.xi_d = 0.3;
  d.kappa = 1e4;
  d.n_m = 100;
  return d;
}

void BM_SusceptibilityClosed(benchmark::State& state) {
  const auto d = sample();
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybridom::susceptibility_closed(d, w));
    w += 0.37;
  }
}
BENCHMARK(BM_SusceptibilityClosed);

void BM_SusceptibilityNumeric(benchmark::State& state) {
  const auto d = sample();
  const auto A = hybridom::build_drift(d);
  double w = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hybridom::susceptibility_numeric(A, w));
    w += 0.37;
  }
}
BENCHMARK(BM_SusceptibilityNumeric);

void BM_StabilityEigen(benchmark::State& state) {
  const auto A = hybridom::build_drift(sample());
  for (auto _ : state) benchmark::DoNotOptimize(hybridom::stability_eigen(A));
}
BENCHMARK(BM_StabilityEigen);

void BM_SpectraAtFrequency(benchmark::State& state) {
  const auto d = sample();
  for (auto _ : state) {
    const auto chi = hybridom::susceptibility_closed(d, 3.0);
    const auto s = hybridom::scattering_matrix(chi, d);
    benchmark::DoNotOptimize(hybridom::amplified_spectrum(s, d, hybridom::Subsystem::Optical));
    benchmark::DoNotOptimize(hybridom::squeezing_spectrum(chi, d, hybridom::Subsystem::Optical));
  }
}
BENCHMARK(BM_SpectraAtFrequency);

void BM_Lyapunov(benchmark::State& state) {
  const auto d = sample();
  const auto A = hybridom::build_drift(d);
  for (auto _ : state) benchmark::DoNotOptimize(hybridom::steady_state_covariance(A, d));
}
BENCHMARK(BM_Lyapunov);

}  // namespace
