#include <benchmark/benchmark.h>

#include <entkit/convex_roof.hpp>
#include <entkit/ent_measure.hpp>
#include <entkit/meb.hpp>
#include <entkit/tgx_construct.hpp>

#include <random>

using namespace entkit;

static void BM_EntRandomState(benchmark::State& state) {
  const ModeStructure s = ModeStructure::parse(state.range(0) == 0 ? "2x3x3" : "2x2x2x2x2");
  std::mt19937_64 rng(1);
  const StateVector psi = random_pure_state(s, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ent_value(psi));
}
BENCHMARK(BM_EntRandomState)->Arg(0)->Arg(1);

static void BM_LstarSet(benchmark::State& state) {
  const ModeStructure s({2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(lstar_set(s));
}
BENCHMARK(BM_LstarSet);

static void BM_A13All(benchmark::State& state) {
  const ModeStructure s = ModeStructure::parse(state.range(0) == 0 ? "2x2x3" : "2x3x4");
  for (auto _ : state) benchmark::DoNotOptimize(a13_all(s));
}
BENCHMARK(BM_A13All)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MebGeneratingSets(benchmark::State& state) {
  const ModeStructure s({3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(generating_sets(s, 3));
}
BENCHMARK(BM_MebGeneratingSets);

static void BM_RoofRank2(benchmark::State& state) {
  const ModeStructure s({2, 2, 2});
  std::mt19937_64 rng(3);
  const CVec a = random_pure_state(s, rng).amplitudes();
  const CVec b = random_pure_state(s, rng).amplitudes();
  const DensityMatrix rho(s, 0.5 * a * a.adjoint() + 0.5 * b * b.adjoint());
  const RoofGrid grid{static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), true, 1e-6, 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(roof_rank2(rho, [](const StateVector& w) { return ent_value(w); }, grid).value);
}
BENCHMARK(BM_RoofRank2)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
