// Microbenchmarks for the exact-arithmetic kernels and the parallel variety
// scan. Run with --benchmark_filter=... to select.

#include <benchmark/benchmark.h>

#include "qea/prng.hpp"
#include "qea/suites.hpp"
#include "qea/variety.hpp"

using namespace qea;

namespace {

Mat random_matrix(const FieldPtr& f, std::uint32_t d, Rng& rng) {
  Mat m(f, d, d);
  for (std::uint32_t i = 0; i < d; ++i)
    for (std::uint32_t j = 0; j < d; ++j) m.at(i, j) = ffelt(rng.below(f->size()));
  return m;
}

void BM_field_tables(benchmark::State& state) {
  for (auto _ : state) {
    // degree-2 extension of F_11: 121-element tables
    benchmark::DoNotOptimize(Field::extension_field(11, 2));
  }
}
BENCHMARK(BM_field_tables);

void BM_matmul(benchmark::State& state) {
  FieldPtr f = Field::extension_field(11, 2);
  Rng rng(1);
  std::uint32_t d = std::uint32_t(state.range(0));
  Mat a = random_matrix(f, d, rng), b = random_matrix(f, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(d);
}
BENCHMARK(BM_matmul)->Arg(64)->Arg(128)->Arg(256)->Complexity();

void BM_rank(benchmark::State& state) {
  FieldPtr f = Field::extension_field(5, 2);
  Rng rng(2);
  std::uint32_t d = std::uint32_t(state.range(0));
  Mat a = random_matrix(f, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.rank());
}
BENCHMARK(BM_rank)->Arg(64)->Arg(128)->Arg(256)->Arg(400);

void BM_tensor_functor(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep M = random_module(ctx, 5, 20);
  ModuleRep N = random_module(ctx, 6, 20);
  for (auto _ : state) benchmark::DoNotOptimize(tensor(M, N));
}
BENCHMARK(BM_tensor_functor);

void BM_variety_scan(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::make(7, 3, 2);
  ModuleRep M = tensor(carlson_module(ctx, {1, 1}), random_module(ctx, 9, 8));
  int workers = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_variety(M, {1, 2}, workers));
  state.counters["dim"] = M.dim();
}
BENCHMARK(BM_variety_scan)->Arg(1)->Arg(2);

void BM_omega(benchmark::State& state) {
  FieldCtx ctx = FieldCtx::make(5, 2, 3);
  ModuleRep M = random_module(ctx, 11, 24);
  for (auto _ : state) benchmark::DoNotOptimize(omega(M));
}
BENCHMARK(BM_omega);

}  // namespace

BENCHMARK_MAIN();
