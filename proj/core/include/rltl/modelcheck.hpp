#pragma once

#include <cstddef>
#include <optional>

#include "rltl/automaton.hpp"
#include "rltl/formula.hpp"
#include "rltl/lasso.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

enum class QueryMode { Exact, AtLeast };

const char* queryModeName(QueryMode mode);

struct ModelCheckResult {
  bool verdict = true;
  /// A word of the system whose value violates the query; set iff !verdict.
  std::optional<LassoWord> counterexample;
  TruthValue queriedValue;
  QueryMode mode = QueryMode::Exact;
  /// States of the product that was checked for emptiness.
  std::size_t productStates = 0;
};

/// Whether every word accepted by `system` has value exactly `b`. The system
/// needs an initial state and its AP list must contain the formula's atoms.
ModelCheckResult mcExact(const Gba& system, const Formula& phi, TruthValue b,
                         std::size_t stateCap = kDefaultStateCap);

/// Whether every word accepted by `system` has value at least `b`.
ModelCheckResult mcAtLeast(const Gba& system, const Formula& phi, TruthValue b,
                           std::size_t stateCap = kDefaultStateCap);

struct BestValue {
  TruthValue value;
  /// The system accepts no word, so every value holds; `value` is then 1111.
  bool vacuous = false;
};

/// Largest b such that every word of `system` has value at least b.
BestValue bestValue(const Gba& system, const Formula& phi, std::size_t stateCap = kDefaultStateCap);

}  // namespace rltl
