#include <benchmark/benchmark.h>

#include "pnr/pnr.hpp"

namespace {

void BM_ClosedFormRates(benchmark::State& state) {
  const auto alpha = pnr::Amplitude::from_mean_photon_number(0.4);
  const pnr::ReceiverParams params{pnr::Amplitude(1.3), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnr::rates_closed_form(alpha, params));
  }
}
BENCHMARK(BM_ClosedFormRates)->Arg(0)->Arg(4)->Arg(16);

void BM_DirectSumRates(benchmark::State& state) {
  const auto alphabet = pnr::Alphabet::equiprobable(pnr::Amplitude::from_mean_photon_number(0.4));
  const pnr::ReceiverParams params{pnr::Amplitude(1.3), static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnr::rates_direct(alphabet, params));
  }
}
BENCHMARK(BM_DirectSumRates)->Arg(0)->Arg(4)->Arg(16);

void BM_OptimizeDisplacement(benchmark::State& state) {
  const auto alpha = pnr::Amplitude::from_mean_photon_number(0.4);
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnr::optimize_displacement(alpha, m));
  }
}
BENCHMARK(BM_OptimizeDisplacement)->DenseRange(0, 4);

void BM_Simulate(benchmark::State& state) {
  const auto alpha = pnr::Amplitude::from_mean_photon_number(0.4);
  const auto alphabet = pnr::Alphabet::equiprobable(alpha);
  const pnr::ReceiverParams params{pnr::Amplitude(1.1), 1};
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnr::simulate(alphabet, params, 1 << 20, 7, pnr::SimulateOptions{threads}));
  }
  state.SetItemsProcessed(state.iterations() * (1 << 20));
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Figure4bSweep(benchmark::State& state) {
  const auto spec = pnr::figure_sweep("4b");
  for (auto _ : state) {
    benchmark::DoNotOptimize(pnr::run_sweep(spec));
  }
}
BENCHMARK(BM_Figure4bSweep)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
