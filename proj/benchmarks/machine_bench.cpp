#include <benchmark/benchmark.h>

#include <advlogic/turing.hpp>

using namespace advlogic;

static TuringMachine unary_incrementer() {
  TuringMachine m(2, 0);
  m.add(0, '1', {0, '1', Move::R});
  m.add(0, '_', {1, '1', Move::R});
  return m;
}

static void BM_SimulateLooper(benchmark::State& state) {
  TuringMachine m = build_looper();
  auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(m, "0", steps).index());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateLooper)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_HaltProbe(benchmark::State& state) {
  std::string w(static_cast<std::size_t>(state.range(0)), '1');
  TuringMachine m2 = build_halt_probe(unary_incrementer(), w);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(m2, "0101").index());
}
BENCHMARK(BM_HaltProbe)->Arg(4)->Arg(16)->Arg(64);

static void BM_ConstantLearner(benchmark::State& state) {
  TuringMachine a = build_constant_learner(build_halt_probe(unary_incrementer(), "11"));
  std::string input = tape_bits(encode_dataset({}));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(a, input, 100 * kDefaultStepBudget).index());
}
BENCHMARK(BM_ConstantLearner)->Unit(benchmark::kMillisecond);

static void BM_EncodeDecode(benchmark::State& state) {
  MachinePair p{build_looper(), build_halt_probe(unary_incrementer(), "101")};
  for (auto _ : state) benchmark::DoNotOptimize(decode_machine_pair(encode_machine_pair(p)).second.states());
}
BENCHMARK(BM_EncodeDecode);

static void BM_DesiredOneProbe(benchmark::State& state) {
  MachinePair p{unary_incrementer(), unary_incrementer()};
  DesiredOneInstance d = reduce_same_to_desiredone(p);
  ProbeBudget budget;
  budget.probe_length = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(desiredone_probe(d.learner, d.target, {"1", "11"}, budget).index());
}
BENCHMARK(BM_DesiredOneProbe)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
