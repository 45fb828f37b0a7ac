#include <benchmark/benchmark.h>

#include "gamma4/gamma4.hpp"

using namespace gamma4;

static void BM_SigmaRecFamily(benchmark::State& state) {
  const Int k = state.range(0);
  for (auto _ : state) {
    SignatureMemo memo;
    benchmark::DoNotOptimize(memo.sigma(2 * k, 2 * k - 1));
  }
}
BENCHMARK(BM_SigmaRecFamily)->Range(8, 8 << 10);

static void BM_SigmaLattice(benchmark::State& state) {
  const Int k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_lattice(2 * k, 2 * k - 1));
}
BENCHMARK(BM_SigmaLattice)->Range(8, 512);

static void BM_Alexander(benchmark::State& state) {
  const Int k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(alexander(2 * k, 2 * k - 1));
}
BENCHMARK(BM_Alexander)->Range(8, 256);

static void BM_PinchSequence(benchmark::State& state) {
  const Int p = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(pinch_sequence({p, p - 1, Hand::Right}, PinchMode::Gamma4));
}
BENCHMARK(BM_PinchSequence)->Range(8, 8 << 10);

static void BM_Report(benchmark::State& state) {
  const Int k = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(report(2 * k, 2 * k - 1));
}
BENCHMARK(BM_Report)->Range(4, 128);
BENCHMARK_MAIN();
