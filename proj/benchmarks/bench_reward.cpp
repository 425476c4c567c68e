#include <benchmark/benchmark.h>

#include "cogent/reward.hpp"

using namespace cogent;
using namespace cogent::reward;

static void BM_MeanReward(benchmark::State& state) {
  double p = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mean_reward(p));
    p += 0.001;
    if (p >= 1.0) p = 0.001;
  }
}
BENCHMARK(BM_MeanReward);

static void BM_GlobalRewardUpdate(benchmark::State& state) {
  GlobalReward g(1.0);
  TimeMs t = 0;
  for (auto _ : state) {
    t += 7;
    g.update(0.25, t);
  }
  benchmark::DoNotOptimize(g.value());
}
BENCHMARK(BM_GlobalRewardUpdate);

static void BM_PartitionStatsWindowed(benchmark::State& state) {
  PartitionStats stats(static_cast<std::size_t>(state.range(0)));
  std::uint64_t i = 0;
  for (auto _ : state) {
    if ((i++ & 7) == 0) stats.add_positive();
    else stats.add_negative();
    benchmark::DoNotOptimize(stats.probability());
  }
}
BENCHMARK(BM_PartitionStatsWindowed)->Arg(0)->Arg(1000);
