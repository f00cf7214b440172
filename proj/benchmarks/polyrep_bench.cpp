#include <benchmark/benchmark.h>

#include <random>

#include "polyrep/exactlin/lattice.hpp"
#include "polyrep/modsym.hpp"
#include "polyrep/series.hpp"
#include "polyrep/wreath/wreath.hpp"

using namespace polyrep;

static void BM_Hnf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(hnf(m));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_VerifyTheorem1(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem1(n, 2));
}
BENCHMARK(BM_VerifyTheorem1)->DenseRange(4, 12, 4);

static void BM_YExplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int k = 1; k <= n; ++k) benchmark::DoNotOptimize(y_explicit(k, 2));
}
BENCHMARK(BM_YExplicit)->Arg(8)->Arg(12)->Arg(16);

static void BM_QuotientY(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(y_series_generators(n, 2));
}
BENCHMARK(BM_QuotientY)->Arg(8)->Arg(12)->Arg(16);

static void BM_VerifyTheorem2C2(benchmark::State& state) {
  const CharTable t = load_table(std::string(POLYREP_TABLE_DIR) + "/c2.json");
  const ELatticeBasis e = e_lattice(t, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem2(t, e, n));
}
BENCHMARK(BM_VerifyTheorem2C2)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
