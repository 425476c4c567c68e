#include <benchmark/benchmark.h>

#include "cogent/codelet_text.hpp"
#include "cogent/hierarchy.hpp"

using namespace cogent;
using namespace cogent::hierarchy;

static void BM_QueuePushPopMixed(benchmark::State& state) {
  const auto capacity = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  for (auto _ : state) {
    state.PauseTiming();
    SchedulerQueue q(capacity);
    state.ResumeTiming();
    for (int i = 0; i < 2000; ++i) {
      ThreadTicket t;
      t.priority = 1 + static_cast<int>(rng.below(100));
      q.push(t);
      if (i % 3 == 0) benchmark::DoNotOptimize(q.pop());
    }
  }
}
BENCHMARK(BM_QueuePushPopMixed)->Arg(512)->Arg(10000);

static void BM_QueueEvictionAtCapacity(benchmark::State& state) {
  Rng rng(5);
  SchedulerQueue q(256);
  for (int i = 0; i < 256; ++i) {
    ThreadTicket t;
    t.priority = 1 + static_cast<int>(rng.below(100));
    q.push(t);
  }
  for (auto _ : state) {
    ThreadTicket t;
    t.priority = 1 + static_cast<int>(rng.below(100));
    q.push(t);  // every push evicts
  }
}
BENCHMARK(BM_QueueEvictionAtCapacity);

static void BM_EngineStepChain(benchmark::State& state) {
  EngineParams params;
  params.usage_threshold = 0.0;
  params.value_threshold = 0.0;
  Engine e(params, 1);
  const auto s = e.add_sensor("v", "v", 1);
  const std::vector<ConceptId> pv{s};
  const auto a = e.integrate_regular(
      "a", vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;MATCH"), pv, 0);
  const std::vector<ConceptId> pa{a};
  e.integrate_regular("b", vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;MATCH"),
                      pa, 0);
  TimeMs now = 0;
  for (auto _ : state) {
    ++now;
    e.on_sensor_event("v", {7}, now);
    benchmark::DoNotOptimize(e.drain(now, 8));
  }
}
BENCHMARK(BM_EngineStepChain);
