#include <benchmark/benchmark.h>

#include "tmzv/zeta.hpp"

using namespace tmzv;

static void BM_MzvDepth(benchmark::State& state) {
  const Index idx = Index::repeated(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ZetaEvaluator ev(100000);
    benchmark::DoNotOptimize(ev.mzv(idx));
  }
}
BENCHMARK(BM_MzvDepth)->DenseRange(1, 6)->Unit(benchmark::kMicrosecond);

static void BM_BoxExpansion(benchmark::State& state) {
  const Index idx = Index::repeated(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ZetaEvaluator ev(100000);
    benchmark::DoNotOptimize(ev.zeta_t_boxes(idx, 0.5));
  }
}
BENCHMARK(BM_BoxExpansion)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

static void BM_ZtEval(benchmark::State& state) {
  const Element e(word_of_index(Index::repeated(3, static_cast<int>(state.range(0)))));
  for (auto _ : state) {
    ZetaEvaluator ev(100000);
    benchmark::DoNotOptimize(ev.z_t_eval(e, 0.5));
  }
}
BENCHMARK(BM_ZtEval)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
