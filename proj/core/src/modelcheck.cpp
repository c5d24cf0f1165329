#include "rltl/modelcheck.hpp"

#include "rltl/construction.hpp"
#include "rltl/error.hpp"

namespace rltl {
namespace {

Gba compileFor(const Gba& system, const Formula& phi, std::size_t stateCap) {
  system.requireInitial();
  CompileOptions options;
  options.aps = system.aps();
  options.stateCap = stateCap;
  return buildAutomaton(phi, options);
}

ModelCheckResult check(const Gba& system, const Gba& automaton, TruthValue b, QueryMode mode,
                       std::size_t stateCap) {
  std::vector<TruthValue> violating;
  for (TruthValue c : TruthValue::all()) {
    const bool ok = mode == QueryMode::Exact ? c == b : b <= c;
    if (!ok) violating.push_back(c);
  }
  ModelCheckResult result;
  result.queriedValue = b;
  result.mode = mode;
  if (violating.empty()) return result;
  const Gba prod = product(system, unionOverValues(automaton, violating), stateCap);
  result.productStates = prod.stateCount();
  EmptinessResult e = isEmpty(prod);
  result.verdict = e.empty;
  if (!e.empty) result.counterexample = std::move(e.witness);
  return result;
}

}  // namespace

const char* queryModeName(QueryMode mode) {
  return mode == QueryMode::Exact ? "exact" : "at-least";
}

ModelCheckResult mcExact(const Gba& system, const Formula& phi, TruthValue b, std::size_t stateCap) {
  return check(system, compileFor(system, phi, stateCap), b, QueryMode::Exact, stateCap);
}

ModelCheckResult mcAtLeast(const Gba& system, const Formula& phi, TruthValue b, std::size_t stateCap) {
  return check(system, compileFor(system, phi, stateCap), b, QueryMode::AtLeast, stateCap);
}

BestValue bestValue(const Gba& system, const Formula& phi, std::size_t stateCap) {
  const Gba automaton = compileFor(system, phi, stateCap);
  if (isEmpty(system).empty) return {TruthValue::top(), true};
  const auto values = TruthValue::all();
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (check(system, automaton, *it, QueryMode::AtLeast, stateCap).verdict) return {*it, false};
  }
  return {TruthValue::bottom(), false};
}

}  // namespace rltl
