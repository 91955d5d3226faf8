#include <benchmark/benchmark.h>

#include "symcalc/random.hpp"
#include "symcalc/star_exp.hpp"

using namespace symcalc;

static WSymbol generator() {
  RandomSymbols rng(9);
  return rng.w_symbol(2, -2, 0, 2);
}

static void BM_StarExpSeries(benchmark::State& state) {
  const WSymbol p = generator();
  for (auto _ : state) benchmark::DoNotOptimize(starexp_series(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StarExpSeries)->DenseRange(2, 6, 2);

static void BM_StarExpOde(benchmark::State& state) {
  const WSymbol p = generator();
  for (auto _ : state) benchmark::DoNotOptimize(starexp_ode(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StarExpOde)->DenseRange(2, 6, 2);

static void BM_StarExpResolvent(benchmark::State& state) {
  const WSymbol p = generator();
  for (auto _ : state) benchmark::DoNotOptimize(starexp_via_resolvent(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_StarExpResolvent)->DenseRange(2, 6, 2);

static void BM_Oscillator(benchmark::State& state) {
  const WSymbol p = oscillator_hamiltonian(ParamScalar::parameter("theta"));
  for (auto _ : state) benchmark::DoNotOptimize(starexp_series(p, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_Oscillator)->Arg(6)->Arg(10);
BENCHMARK_MAIN();
