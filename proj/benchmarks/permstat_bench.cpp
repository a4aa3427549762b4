#include <benchmark/benchmark.h>

#include "permstat/ballot.hpp"
#include "permstat/parity.hpp"
#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"
#include "permstat/tableau.hpp"
#include "permstat/wilf.hpp"

using namespace permstat;

static void BM_EnumerateAvoiders321(benchmark::State& state) {
  const PatternSet set{Permutation{3, 2, 1}};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_avoiders(n, set));
}
BENCHMARK(BM_EnumerateAvoiders321)->DenseRange(6, 11);

static void BM_ContainsLength3(benchmark::State& state) {
  const auto host = Permutation::identity(static_cast<std::size_t>(state.range(0)));
  const Permutation pat{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(contains_pattern(host, pat));
}
BENCHMARK(BM_ContainsLength3)->RangeMultiplier(2)->Range(8, 256);

static void BM_ContainsGeneric(benchmark::State& state) {
  const auto host = Permutation::identity(static_cast<std::size_t>(state.range(0)));
  const Permutation pat{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(contains_pattern_generic(host.values(), pat));
}
BENCHMARK(BM_ContainsGeneric)->RangeMultiplier(2)->Range(8, 64);

static void BM_StatPolynomialFullSn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stat_polynomial(n, PatternSet{}, StatName::charge));
}
BENCHMARK(BM_StatPolynomialFullSn)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_BruteCh321(benchmark::State& state) {
  const PatternSet set{Permutation{3, 2, 1}};
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(stat_polynomial(n, set, StatName::charge));
}
BENCHMARK(BM_BruteCh321)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

static void BM_FastCh321(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fast_ch_321(n));
}
BENCHMARK(BM_FastCh321)->Arg(10)->Arg(15)->Arg(19)->Unit(benchmark::kMillisecond);

static void BM_RskInsert(benchmark::State& state) {
  const Permutation p{3, 2, 8, 5, 7, 4, 6, 1, 9};
  for (auto _ : state) benchmark::DoNotOptimize(rsk_insert(p));
}
BENCHMARK(BM_RskInsert);

static void BM_BallotRankUnrank(benchmark::State& state) {
  const auto w = ballot_unrank(15, 3210);
  for (auto _ : state) benchmark::DoNotOptimize(ballot_unrank(15, ballot_rank(w)));
}
BENCHMARK(BM_BallotRankUnrank);

static void BM_Theorem4Classes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem4(8));
}
BENCHMARK(BM_Theorem4Classes)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
