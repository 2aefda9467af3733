#include <benchmark/benchmark.h>

#include "glab/fq.hpp"
#include "glab/fqpoly.hpp"

using namespace glab;

static void BM_fq_mul(benchmark::State& state) {
  auto F = FqField::make(7, 2);
  auto a = F->from_index(9), b = F->from_index(37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_fq_mul);

static void BM_factor_deg8_f49(benchmark::State& state) {
  auto F = FqField::make(7, 2);
  auto f = monic_poly_by_index(F->one(), 8, 987654321u);
  for (auto _ : state) {
    benchmark::DoNotOptimize(poly_factor(f));
  }
}
BENCHMARK(BM_factor_deg8_f49);

BENCHMARK_MAIN();
