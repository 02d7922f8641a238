#include <benchmark/benchmark.h>

#include "tanaka/catalog.hpp"
#include "tanaka/crmodels.hpp"
#include "tanaka/frames.hpp"
#include "tanaka/prolong.hpp"

using namespace tanaka;

static void BM_HallBasis(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(HallBasis(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_HallBasis)->DenseRange(3, 7);

static void BM_SymbolAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_symbol_algebra(static_cast<int>(state.range(0))).algebra.dim());
}
BENCHMARK(BM_SymbolAlgebra)->Arg(3)->Arg(6)->Arg(12);

static void BM_LeviTanaka(benchmark::State& state) {
  const auto m = realify(build_symbol_algebra(static_cast<int>(state.range(0))).algebra).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(full_prolongation(m, Flavor::LeviTanaka).total_dim());
}
BENCHMARK(BM_LeviTanaka)->Arg(1)->Arg(3)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_FullTanakaG2(benchmark::State& state) {
  const auto m = realify(build_symbol_algebra(3).algebra).algebra;
  for (auto _ : state) benchmark::DoNotOptimize(full_prolongation(m, Flavor::FullTanaka).total_dim());
}
BENCHMARK(BM_FullTanakaG2)->Unit(benchmark::kMillisecond);

static void BM_VerifyTheorem(benchmark::State& state) {
  const auto s = build_symbol_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(s).confirmed());
}
BENCHMARK(BM_VerifyTheorem)->Arg(3)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_SymbolFromFrame(benchmark::State& state) {
  const auto cat = builtin_catalog();
  const auto& m = find_model(cat, "rigid-k10");
  for (auto _ : state) benchmark::DoNotOptimize(symbol_from_frame(m).algebra.dim());
}
BENCHMARK(BM_SymbolFromFrame)->Unit(benchmark::kMillisecond);

static void BM_BchAssociativity(benchmark::State& state) {
  const auto cat = builtin_catalog();
  const auto m = realify(symbol_from_frame(find_model(cat, "rigid-k10")).algebra).algebra;
  for (auto _ : state) {
    const auto g = bch_group_law(m);
    benchmark::DoNotOptimize(check_associativity(g));
  }
}
BENCHMARK(BM_BchAssociativity)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
