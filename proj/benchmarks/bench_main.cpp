#include <benchmark/benchmark.h>

#include "bfrg/anf.hpp"
#include "bfrg/detector.hpp"
#include "bfrg/families.hpp"
#include "bfrg/rg.hpp"
#include "bfrg/symmetric.hpp"

using namespace bfrg;

static void BM_Decimate(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto t = random_table(n, 0.5, 1);
  unsigned var = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decimate(t, var));
    var = var % n + 1;
  }
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(t.num_words() * 8));
}
BENCHMARK(BM_Decimate)->DenseRange(12, 24, 4);

static void BM_Mobius(benchmark::State& state) {
  const auto t = random_table(static_cast<unsigned>(state.range(0)), 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(mobius_transform(t));
}
BENCHMARK(BM_Mobius)->DenseRange(12, 24, 4);

static void BM_ExhaustiveNearest(benchmark::State& state) {
  const auto p = planted_with_flips(static_cast<unsigned>(state.range(0)), 1, 3, 3);
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_nearest_polynomial(p.table, 1, {}, threads));
}
BENCHMARK(BM_ExhaustiveNearest)->Args({12, 1})->Args({16, 1})->Args({16, 0})->Unit(benchmark::kMillisecond);

static void BM_WalshAffine(benchmark::State& state) {
  const auto p = planted_with_flips(static_cast<unsigned>(state.range(0)), 1, 3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(nearest_affine_walsh(p.table));
}
BENCHMARK(BM_WalshAffine)->Arg(16)->Arg(20);

static void BM_SymFlow(benchmark::State& state) {
  const auto f = SymmetricFunction::mod_p(static_cast<unsigned>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(sym_flow(f, 30, 3));
}
BENCHMARK(BM_SymFlow)->Arg(1000)->Arg(4096)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
