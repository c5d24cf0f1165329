#include <benchmark/benchmark.h>

#include "rltl/semantics.hpp"

using namespace rltl;

namespace {

const std::vector<std::string> kPQ{"p", "q"};

void BM_EvalRLTL(benchmark::State& state) {
  const Formula phi = parse("G (p -> F q) & (p R q) & (!p U q)", Logic::RLTL);
  std::vector<Letter> prefix, loop;
  for (int i = 0; i < state.range(0); ++i) {
    prefix.push_back(static_cast<Letter>(i % 3));
    loop.push_back(static_cast<Letter>((i * 7 + 1) % 4));
  }
  const LassoWord x(kPQ, prefix, loop);
  for (auto _ : state) benchmark::DoNotOptimize(evalRLTL(phi, x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvalRLTL)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_EvalLTLTranslation(benchmark::State& state) {
  const Formula phi = parse("G F p -> G F q", Logic::RLTL);
  const Formula ltl = translateToLTL(phi, static_cast<int>(state.range(0)));
  const LassoWord x = LassoWord::parse("{p} {} {q} ; {p,q} {} {p}", kPQ);
  for (auto _ : state) benchmark::DoNotOptimize(evalLTL(ltl, x));
}
BENCHMARK(BM_EvalLTLTranslation)->DenseRange(1, 4);

}  // namespace
