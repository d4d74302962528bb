#include <benchmark/benchmark.h>

#include "jetgeo/flow/jet.hpp"
#include "jetgeo/hill/hill.hpp"
#include "jetgeo/poly/seagull.hpp"
#include "jetgeo/quad/periods.hpp"
#include "jetgeo/verify/scans.hpp"
#include "jetgeo/verify/theorem.hpp"

using namespace jetgeo;

static void BM_RealRootsF0(benchmark::State& state) {
  const Polynomial q = 1.0 - seagull_F0() * seagull_F0();
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(q, -3.0, 3.0));
}
BENCHMARK(BM_RealRootsF0);

static void BM_Cost0LimitF1(benchmark::State& state) {
  const Polynomial F1 = seagull_F1();
  for (auto _ : state) benchmark::DoNotOptimize(cost0_limit(F1));
}
BENCHMARK(BM_Cost0LimitF1);

static void BM_Lowbound(benchmark::State& state) {
  const double u = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lowbound(u));
}
BENCHMARK(BM_Lowbound)->Arg(2)->Arg(5)->Arg(10);

static void BM_DiamondPeriods(benchmark::State& state) {
  const Polynomial F0 = seagull_F0();
  for (auto _ : state) benchmark::DoNotOptimize(diamond_periods(F0, {0.1, 0.5}));
}
BENCHMARK(BM_DiamondPeriods);

static void BM_MagneticTrace(benchmark::State& state) {
  const Polynomial F0 = seagull_F0();
  for (auto _ : state) benchmark::DoNotOptimize(magnetic_trace(F0, {0.1, 0.5}, {0.0, 0.0, 0.0}, 1, 10.0, 1e-3));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_MagneticTrace)->Unit(benchmark::kMillisecond);

static void BM_JetLift(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Polynomial F0 = seagull_F0();
  const JetState init{0.1, std::vector<double>(static_cast<std::size_t>(k) + 1, 0.0)};
  for (auto _ : state) benchmark::DoNotOptimize(jet_geodesic(F0, init, 1, 10.0, 1e-3));
}
BENCHMARK(BM_JetLift)->Arg(2)->Arg(18)->Unit(benchmark::kMillisecond);

static void BM_MonotonicityScan(benchmark::State& state) {
  const Polynomial F0 = seagull_F0();
  const auto grid = default_tau_grid(F0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(cost_monotonicity_scan(F0, 2.0, grid));
}
BENCHMARK(BM_MonotonicityScan)->Unit(benchmark::kMillisecond);

static void BM_VerifyF0(benchmark::State& state) {
  const Polynomial F0 = seagull_F0();
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_main(F0));
}
BENCHMARK(BM_VerifyF0)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
