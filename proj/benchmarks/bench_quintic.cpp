#include <benchmark/benchmark.h>

#include "quintic/graphs.hpp"
#include "quintic/hae.hpp"
#include "quintic/mirror.hpp"
#include "quintic/oscpf.hpp"
#include "quintic/qde.hpp"

using namespace quintic;

static void BM_BuildIData(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(build_idata(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_BuildIData)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_RSequence(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(r_sequence(5, 0, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_RSequence)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_RMatrix(benchmark::State& st) {
  const int k = static_cast<int>(st.range(0));
  auto row0 = row0_entries(k);
  for (auto _ : st) benchmark::DoNotOptimize(r_matrix(k, row0));
}
BENCHMARK(BM_RMatrix)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_SDelta(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(s_delta(static_cast<int>(st.range(0))));
}
BENCHMARK(BM_SDelta)->Arg(6)->Arg(12)->Unit(benchmark::kMicrosecond);

static void BM_HaeCheck(benchmark::State& st) {
  Fixtures fx = fixtures();
  for (auto _ : st) benchmark::DoNotOptimize(hae_check(fx));
}
BENCHMARK(BM_HaeCheck)->Unit(benchmark::kMicrosecond);

static void BM_Tripartite(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_tripartite(2, 0));
}
BENCHMARK(BM_Tripartite)->Unit(benchmark::kMillisecond);

static void BM_StableGraphs(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_stable(2, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_StableGraphs)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_PsiIntegral(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(psi_integral(4, {3, 3, 3, 0}));
}
BENCHMARK(BM_PsiIntegral);

BENCHMARK_MAIN();
