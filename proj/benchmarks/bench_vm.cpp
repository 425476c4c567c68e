#include <benchmark/benchmark.h>

#include <vector>

#include "cogent/codelet_text.hpp"
#include "cogent/vm.hpp"

using namespace cogent;

static void BM_ExecuteIdentity(benchmark::State& state) {
  const vm::Codelet c = vm::parse_codelet("ARITY 1;LOAD 0 0;EMIT;MATCH");
  const std::vector<IntVec> inputs{{42}};
  for (auto _ : state) {
    auto out = vm::execute(c, inputs, 100);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ExecuteIdentity);

static void BM_ExecuteArithmetic(benchmark::State& state) {
  const vm::Codelet c = vm::parse_codelet(
      "ARITY 1;LOAD 0 0;LOAD 0 1;ADD;LOAD 0 2;MUL;PUSH 7;SUB;NEG;EMIT;MATCH");
  const std::vector<IntVec> inputs{{3, 5, 9}};
  for (auto _ : state) {
    auto out = vm::execute(c, inputs, 100);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_ExecuteArithmetic);

static void BM_ExecuteLoopUntilBudget(benchmark::State& state) {
  const vm::Codelet c = vm::parse_codelet("ARITY 1;JMP -1");
  const std::vector<IntVec> inputs{{1}};
  const int budget = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto out = vm::execute(c, inputs, budget);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * budget);
}
BENCHMARK(BM_ExecuteLoopUntilBudget)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_GenerateAndValidate(benchmark::State& state) {
  vm::GenParams params;
  Rng rng(1);
  for (auto _ : state) {
    const vm::Codelet c = vm::generate_random(params, rng);
    benchmark::DoNotOptimize(vm::validate(c));
  }
}
BENCHMARK(BM_GenerateAndValidate);

BENCHMARK_MAIN();
