#include <benchmark/benchmark.h>

#include "hybridom/emit.hpp"
#include "hybridom/presets.hpp"
#include "hybridom/sweep.hpp"

namespace {

void BM_PresetSweep(benchmark::State& state, const char* id) {
  const auto cfg = hybridom::load_preset(id);
  for (auto _ : state) benchmark::DoNotOptimize(hybridom::run_sweep(cfg));
}
BENCHMARK_CAPTURE(BM_PresetSweep, fig2a, "fig2a")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PresetSweep, fig5a, "fig5a")->Unit(benchmark::kMillisecond);

void BM_FrequencyScan(benchmark::State& state) {
  const auto cfg = hybridom::parse_config(R"(
params: {C0: 100, C1: 10, xi_m_ratio: 0.9, xi_d: 0.1, kappa: 1.0e4, n_m: 100}
sweep: {axis: omega, from: -1.0e5, to: 1.0e5, points: )" + std::to_string(state.range(0)) + R"(}
observables: [gain:optical, added_noise:optical, squeezing:optical, purity:optical]
)");
  for (auto _ : state) benchmark::DoNotOptimize(hybridom::run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FrequencyScan)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_EmitCsv(benchmark::State& state) {
  const auto r = hybridom::run_sweep(hybridom::load_preset("fig3a"));
  for (auto _ : state) benchmark::DoNotOptimize(hybridom::to_csv(r));
}
BENCHMARK(BM_EmitCsv);

}  // namespace
