#include <benchmark/benchmark.h>

#include "symcalc/laplace.hpp"
#include "symcalc/random.hpp"

using namespace symcalc;

// Polynomial degree of the random operands grows with the range argument.
static void BM_WStar(benchmark::State& state) {
  RandomSymbols rng(1);
  const auto degree = static_cast<unsigned>(state.range(0));
  const WSymbol p = rng.w_symbol(2, -2, 1, degree, 6);
  const WSymbol q = rng.w_symbol(2, -2, 1, degree, 6);
  for (auto _ : state) benchmark::DoNotOptimize(star(p, q));
}
BENCHMARK(BM_WStar)->Arg(2)->Arg(4)->Arg(6);

static void BM_SWStar(benchmark::State& state) {
  RandomSymbols rng(2);
  const auto depth = static_cast<unsigned>(state.range(0));
  const SWSymbol p = rng.sw_symbol(2, depth, -2, 1, 2);
  const SWSymbol q = rng.sw_symbol(2, depth, -2, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(star(p, q));
}
BENCHMARK(BM_SWStar)->Arg(4)->Arg(8);

static void BM_TWStar(benchmark::State& state) {
  RandomSymbols rng(3);
  const auto d = static_cast<unsigned>(state.range(0));
  const TWSymbol f = rng.tw_symbol(2, d, 0, 2, 2);
  const TWSymbol g = rng.tw_symbol(2, d, 0, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g));
}
BENCHMARK(BM_TWStar)->Arg(4)->Arg(8);

static void BM_TWStarWindowed(benchmark::State& state) {
  RandomSymbols rng(4);
  const auto d = static_cast<unsigned>(state.range(0));
  const TWSymbol f = laplace(rng.sw_symbol(2, d, -2, 1, 2).truncated(-1), d);
  const TWSymbol g = laplace(rng.sw_symbol(2, d, -2, 1, 2).truncated(-1), d);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g));
}
BENCHMARK(BM_TWStarWindowed)->Arg(4)->Arg(8);

static void BM_LaplaceRoundTrip(benchmark::State& state) {
  RandomSymbols rng(5);
  const SWSymbol f = rng.sw_symbol(2, 8, -2, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(inverse_laplace(laplace(f, 8)));
}
BENCHMARK(BM_LaplaceRoundTrip);
