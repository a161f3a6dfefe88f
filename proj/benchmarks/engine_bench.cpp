#include <benchmark/benchmark.h>

#include "yangian/gauss.hpp"
#include "yangian/suites.hpp"

using namespace yangian;

static void BM_TableGeneration(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int level = static_cast<int>(state.range(1));
  std::size_t entries = 0;
  for (auto _ : state) {
    Algebra alg(m);
    alg.prepare(level);
    entries = alg.tableEntryCount();
  }
  state.counters["entries"] = static_cast<double>(entries);
}
BENCHMARK(BM_TableGeneration)->Args({1, 6})->Args({2, 4})->Args({3, 3})->Unit(benchmark::kMillisecond);

// Normal form of a product of degree-one letters.
static void BM_NormalizeProduct(benchmark::State& state) {
  Algebra alg(static_cast<int>(state.range(0)));
  const int n = alg.index().N();
  Word w;
  for (int k = 0; k < 4; ++k) w.push(alg.codec().t(n - k % n, 1 + k % n, 1 + k % 2));
  Poly p = Poly::word(alg.m(), w, Rational(1));
  alg.normalize(p);
  for (auto _ : state) benchmark::DoNotOptimize(alg.normalize(p));
}
BENCHMARK(BM_NormalizeProduct)->Arg(1)->Arg(2);

static void BM_GaussDecompose(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) {
    Algebra alg(m);
    NormalRing ring{&alg};
    auto g = gaussDecompose(ring, tMatrix(alg, order, true));
    benchmark::DoNotOptimize(g.h(1));
  }
}
BENCHMARK(BM_GaussDecompose)->Args({1, 5})->Args({2, 3})->Unit(benchmark::kMillisecond);

static void BM_Suite(benchmark::State& state, const char* id, int m, int order) {
  RunOptions options;
  options.jobs = 1;
  for (auto _ : state) {
    Report r = runSuite(id, m, order, options);
    if (!r.allPass()) state.SkipWithError("suite failed");
  }
}
BENCHMARK_CAPTURE(BM_Suite, thm_odp_m1_d5, "thm-odp", 1, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, thm_dp_m2_d3, "thm-dp", 2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Suite, prop_copr_m1_d5, "prop-copr", 1, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
