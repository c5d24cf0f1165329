#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rltl/automaton.hpp"
#include "rltl/lasso.hpp"

namespace rltl {

/// Deterministic, complete Rabin automaton over 2^AP.
///
/// A run is accepting when some pair i has its E-set visited finitely often
/// and its F-set visited infinitely often.
class RabinAutomaton {
public:
  RabinAutomaton(std::vector<std::string> aps, std::size_t pairCount);

  const std::vector<std::string>& aps() const noexcept { return aps_; }
  std::size_t letterCount() const noexcept { return std::size_t{1} << aps_.size(); }

  StateId addState(std::string annotation = {});
  std::size_t stateCount() const noexcept { return annotations_.size(); }
  const std::string& annotation(StateId s) const { return annotations_.at(s); }

  StateId successor(StateId s, Letter a) const { return delta_[s * letterCount() + a]; }
  void setSuccessor(StateId s, Letter a, StateId t) { delta_.at(s * letterCount() + a) = t; }

  StateId initial() const noexcept { return initial_; }
  void setInitial(StateId s) { initial_ = s; }

  std::size_t pairCount() const noexcept { return pairCount_; }
  void addToE(StateId s, std::uint32_t pair);
  void addToF(StateId s, std::uint32_t pair);
  /// Sorted pair indices whose E-set (F-set) contains `s`.
  const std::vector<std::uint32_t>& eOf(StateId s) const { return e_.at(s); }
  const std::vector<std::uint32_t>& fOf(StateId s) const { return f_.at(s); }

  /// Whether the set of states visited infinitely often satisfies some pair.
  bool acceptingSet(const std::vector<StateId>& infinite) const;

  /// Whether u·v^ω is accepted. Atoms of the word must be in the AP list.
  bool acceptsLasso(const LassoWord& word) const;

private:
  std::vector<std::string> aps_;
  std::size_t pairCount_;
  std::vector<std::string> annotations_;
  std::vector<StateId> delta_;
  std::vector<std::vector<std::uint32_t>> e_;
  std::vector<std::vector<std::uint32_t>> f_;
  StateId initial_ = 0;
};

/// Limit on the AP count accepted by determinize (letters are enumerated).
inline constexpr std::size_t kMaxDeterminizeAps = 12;

/// Safra's construction. `nba` needs an initial state and at most one
/// acceptance set (none means every state is accepting). Pairs whose F-set
/// stays empty are dropped. Throws ResourceLimit when more than `stateCap`
/// trees are reachable or the AP list is longer than kMaxDeterminizeAps.
RabinAutomaton determinize(const Gba& nba, std::size_t stateCap = kDefaultStateCap);

}  // namespace rltl
