#include <benchmark/benchmark.h>

#include "hcd/assembler.hpp"
#include "hcd/cyclic.hpp"
#include "hcd/h2.hpp"
#include "hcd/kts.hpp"

static void BM_ConstructC6(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hcd::assembler::construct_c6(v));
}
BENCHMARK(BM_ConstructC6)->Arg(12)->Arg(24)->Arg(36)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_ConstructC9(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hcd::assembler::construct_c9(v));
}
BENCHMARK(BM_ConstructC9)->Arg(15)->Arg(27)->Arg(36)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_Split2(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hcd::assembler::construct_c6_split2(v));
}
BENCHMARK(BM_Split2)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
  const hcd::Decomposition d = hcd::assembler::construct_c9(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hcd::verify_decomposition(d));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * d.cycles.size()));
}
BENCHMARK(BM_Verify)->Arg(18)->Arg(36)->Arg(72)->Unit(benchmark::kMillisecond);

static void BM_H2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hcd::h2_decompose(n, 1));
}
BENCHMARK(BM_H2)->Arg(8)->Arg(13)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_KtsSearch15(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hcd::search_kts(15));
}
BENCHMARK(BM_KtsSearch15)->Unit(benchmark::kMillisecond);

static void BM_CyclicVerify(benchmark::State& state) {
  const auto& s = hcd::cyclic::bundled_system(9, 30);
  for (auto _ : state) benchmark::DoNotOptimize(hcd::cyclic::verify_cyclic(s));
}
BENCHMARK(BM_CyclicVerify)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
