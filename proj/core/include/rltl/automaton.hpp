#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rltl/lasso.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

using StateId = std::uint32_t;

/// A conjunction of literals over the AP list: letter `a` satisfies the guard
/// when `(a & care) == value`.
struct Guard {
  Letter care = 0;
  Letter value = 0;

  bool matches(Letter a) const noexcept { return (a & care) == value; }
  /// Some letter satisfying the guard (don't-care atoms are left out).
  Letter witness() const noexcept { return value; }

  friend bool operator==(const Guard&, const Guard&) = default;
};

std::optional<Guard> conjoin(const Guard& a, const Guard& b) noexcept;

struct Edge {
  Guard guard;
  StateId dst;
};

/// Generalized Büchi automaton over 2^AP with guarded edges.
///
/// The AP list is sorted and duplicate-free. A run is accepting when it
/// visits every acceptance set infinitely often; with no sets every infinite
/// run is accepting. Automata built from formulas additionally carry one
/// designated start state per truth value.
class Gba {
public:
  explicit Gba(std::vector<std::string> aps = {});

  const std::vector<std::string>& aps() const noexcept { return aps_; }
  std::optional<std::size_t> apIndex(const std::string& name) const;

  StateId addState(std::string annotation = {});
  std::size_t stateCount() const noexcept { return edges_.size(); }
  std::size_t edgeCount() const noexcept;

  void addEdge(StateId src, Guard guard, StateId dst);
  const std::vector<Edge>& edges(StateId s) const { return edges_.at(s); }

  const std::string& annotation(StateId s) const { return annotations_.at(s); }
  void setAnnotation(StateId s, std::string text) { annotations_.at(s) = std::move(text); }

  std::size_t addAcceptanceSet(std::string label = {});
  std::size_t acceptanceSetCount() const noexcept { return setLabels_.size(); }
  const std::string& acceptanceLabel(std::size_t set) const { return setLabels_.at(set); }
  void addToSet(StateId s, std::size_t set);
  /// Sorted indices of the acceptance sets containing `s`.
  const std::vector<std::uint32_t>& setsOf(StateId s) const { return sets_.at(s); }
  bool inSet(StateId s, std::size_t set) const;

  std::optional<StateId> initial() const noexcept { return initial_; }
  void setInitial(StateId s);

  bool hasValueStates() const noexcept { return valueStates_.has_value(); }
  /// Designated start state q_b; throws MissingDesignatedState if absent.
  StateId valueState(TruthValue b) const;
  void setValueStates(const std::array<StateId, 5>& states);
  void clearValueStates() noexcept { valueStates_.reset(); }

  /// Initial state, or throws Error when the automaton has none.
  StateId requireInitial() const;

private:
  std::vector<std::string> aps_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::string> annotations_;
  std::vector<std::vector<std::uint32_t>> sets_;
  std::vector<std::string> setLabels_;
  std::optional<StateId> initial_;
  std::optional<std::array<StateId, 5>> valueStates_;
};

/// A_φ^b: copy with q_b as the single initial state.
Gba restrictInitial(const Gba& a, TruthValue b);

/// Accepts the union of L(A_φ^b) over b in `values`, via a fresh initial
/// state that copies the outgoing edges of each selected q_b.
Gba unionOverValues(const Gba& a, const std::vector<TruthValue>& values);

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// Synchronous product restricted to reachable pairs; acceptance sets of
/// `a` come first, then those of `b`. Throws AlphabetMismatch if the AP lists
/// differ and ResourceLimit past `stateCap` states.
Gba product(const Gba& a, const Gba& b, std::size_t stateCap = kDefaultStateCap);

struct EmptinessResult {
  bool empty = true;
  /// Accepted word when nonempty.
  std::optional<LassoWord> witness;
  /// Accepting run on the witness: runPrefix[i] reads letter i of the word's
  /// prefix, runCycle[i] reads letter i of its loop.
  std::vector<StateId> runPrefix;
  std::vector<StateId> runCycle;
};

/// SCC-based emptiness check with lasso witness extraction.
EmptinessResult isEmpty(const Gba& a);

/// Deterministic automaton accepting exactly u·v^ω, over `aps` (which must
/// contain the word's alphabet).
Gba lassoAutomaton(const LassoWord& word, const std::vector<std::string>& aps);

/// Single all-accepting state looping on every letter.
Gba universalAutomaton(const std::vector<std::string>& aps);

/// Whether u·v^ω ∈ L(a). Atoms of the word must belong to a's AP list;
/// AP entries absent from the word are read as false.
bool memberLasso(const Gba& a, const LassoWord& word);

/// Equivalent automaton with exactly one acceptance set (round-robin
/// counter over the original sets), built over reachable states.
Gba degeneralize(const Gba& a);

/// Drops states that are unreachable or cannot reach an accepting cycle.
Gba trim(const Gba& a);

}  // namespace rltl
