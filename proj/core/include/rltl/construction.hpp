#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rltl/automaton.hpp"
#include "rltl/formula.hpp"

namespace rltl {

struct CompileOptions {
  /// AP list of the result; defaults to the formula's atoms. Must contain
  /// every atom of the formula.
  std::optional<std::vector<std::string>> aps;
  std::size_t stateCap = kDefaultStateCap;
};

struct Compilation {
  Gba automaton;
  Closure closure;
  /// For every state, the value of each closure entry at the position the
  /// state stands for; empty for the designated start states.
  std::vector<std::vector<TruthValue>> expansion;
};

/// Builds A_φ with designated start states q_0000 ... q_1111 (state ids 0..4)
/// such that a lasso is accepted from q_b exactly when its value is b.
/// Only reachable expansion states are generated. Throws ResourceLimit past
/// the state cap.
Compilation compile(const Formula& phi, const CompileOptions& options = {});

inline Gba buildAutomaton(const Formula& phi, const CompileOptions& options = {}) {
  return compile(phi, options).automaton;
}

}  // namespace rltl
