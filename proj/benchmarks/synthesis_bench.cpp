#include <benchmark/benchmark.h>

#include "rltl/synthesis.hpp"

using namespace rltl;

namespace {

const std::vector<std::string> kPQ{"p", "q"};

void BM_Determinize(benchmark::State& state) {
  const char* const formulas[] = {"G p", "F G p", "G F p & G F q", "F G p | G F q"};
  const Gba nba = buildWinningAutomaton(parse(formulas[state.range(0)], Logic::RLTL), {TruthValue::top()}, kPQ);
  std::size_t states = 0;
  for (auto _ : state) states = determinize(nba).stateCount();
  state.SetLabel(std::string(formulas[state.range(0)]) + ", " + std::to_string(nba.stateCount()) + " -> " +
                 std::to_string(states) + " states");
}
BENCHMARK(BM_Determinize)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Synthesize(benchmark::State& state) {
  const GameGraph g = parseGame(
      "aps req grant\nvertex idle 1 {}\nvertex ask 0 {req}\nvertex serve 1 {grant}\nvertex wait 1 {req}\n"
      "edge idle idle ask\nedge ask serve wait\nedge serve idle ask\nedge wait serve wait\ninitial idle\n");
  const Formula phi = parse("G (req -> F grant)", Logic::RLTL);
  std::vector<TruthValue> targets;
  for (int r = static_cast<int>(state.range(0)); r <= 4; ++r) targets.push_back(TruthValue::fromRank(r));
  for (auto _ : state) benchmark::DoNotOptimize(synthesize(g, phi, targets).winner);
  state.SetLabel("at least " + TruthValue::fromRank(static_cast<int>(state.range(0))).str());
}
BENCHMARK(BM_Synthesize)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace
