#include <benchmark/benchmark.h>

#include <cstdint>

#include "qpart/bijections.hpp"
#include "qpart/enumerate.hpp"
#include "qpart/qseries.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"
#include "qpart/verify.hpp"

namespace {

using namespace qpart;

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (int k = 1; k <= n; ++k) for_each_partition(n, k, [&](const SetPartition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * bell(n)));
}
BENCHMARK(BM_EnumerateAll)->DenseRange(8, 11);

void BM_MakSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    StatValue total = 0;
    for (int k = 1; k <= n; ++k) for_each_partition(n, k, [&](const SetPartition& p) { total += mak(p); });
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * bell(n)));
}
BENCHMARK(BM_MakSweep)->DenseRange(8, 11)->Unit(benchmark::kMillisecond);

void BM_CoordSums(benchmark::State& state) {
  const auto p = parse_partition("1,4,8,12/2,9,15/3,7,10,16/5,6,11/13,14");
  for (auto _ : state) benchmark::DoNotOptimize(coord_sums(p));
}
BENCHMARK(BM_CoordSums);

void BM_Phi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t images = 0;
    for (int k = 1; k <= n; ++k) {
      for_each_partition(n, k, [&](const SetPartition& p) { images += phi(p).size(); });
    }
    benchmark::DoNotOptimize(images);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * bell(n)));
}
BENCHMARK(BM_Phi)->DenseRange(7, 9)->Unit(benchmark::kMillisecond);

void BM_QStirling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_stirling(n, n / 2));
}
BENCHMARK(BM_QStirling)->RangeMultiplier(2)->Range(8, 32);

void BM_SweepThreads(benchmark::State& state) {
  const auto stat = parse_statistic("mak");
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_generating_function(11, 5, stat, false, threads));
}
BENCHMARK(BM_SweepThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
