#include <benchmark/benchmark.h>

#include "tmzv/identities.hpp"
#include "tmzv/stuffle.hpp"

using namespace tmzv;

// z_2 z_1^n * z_2 z_1^n without a memo table
static void BM_StuffleUncached(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = Word::z(2) + word_of_index(Index::repeated(1, n));
  for (auto _ : state) {
    ProductEngine engine(ProductKind::t_stuffle, false);
    benchmark::DoNotOptimize(engine.multiply(w, w));
  }
}
BENCHMARK(BM_StuffleUncached)->DenseRange(1, 4);

static void BM_StuffleMemoized(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Word w = Word::z(2) + word_of_index(Index::repeated(1, n));
  for (auto _ : state) {
    ProductEngine engine(ProductKind::t_stuffle);
    benchmark::DoNotOptimize(engine.multiply(w, w));
  }
}
BENCHMARK(BM_StuffleMemoized)->DenseRange(1, 4);

static void BM_Combinatorial(benchmark::State& state) {
  const Index a = Index::repeated(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stuffle_combinatorial(a, a));
}
BENCHMARK(BM_Combinatorial)->DenseRange(1, 4);

static void BM_ClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_rhs({3, 2, 2, n, n}));
}
BENCHMARK(BM_ClosedForm)->DenseRange(0, 3);
