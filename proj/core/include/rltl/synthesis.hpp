#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rltl/automaton.hpp"
#include "rltl/formula.hpp"
#include "rltl/game.hpp"
#include "rltl/parity.hpp"
#include "rltl/rabin.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// Büchi automaton (one acceptance set, trimmed) accepting the words whose
/// value lies in `targets`. `aps` defaults to the formula's atoms.
Gba buildWinningAutomaton(const Formula& phi, const std::vector<TruthValue>& targets,
                          const std::optional<std::vector<std::string>>& aps = std::nullopt,
                          std::size_t stateCap = kDefaultStateCap);

/// Product of a game graph with a deterministic Rabin automaton, restricted
/// to vertices reachable from (v0, initial state). Edge (v,q) -> (v',q')
/// exists iff v -> v' in the graph and q' = δ(q, λ(v)).
struct RabinGame {
  std::vector<Player> owner;
  std::vector<std::vector<std::uint32_t>> successors;
  std::vector<VertexId> vertex;
  std::vector<StateId> state;
  std::size_t pairCount = 0;
  /// Rabin pairs indexed by automaton state: E-set and F-set memberships.
  std::vector<std::vector<std::uint32_t>> finiteOf;
  std::vector<std::vector<std::uint32_t>> infiniteOf;
  std::uint32_t initial = 0;

  std::size_t size() const noexcept { return owner.size(); }
};

RabinGame buildProductGame(const GameGraph& g, const RabinAutomaton& c, VertexId v0,
                           std::size_t vertexCap = kDefaultStateCap);

/// Finite-state strategy for `player` on some arena. Memory state m sits at
/// arena vertex `memory[m].vertex`; where the player moves, `move` is the
/// chosen successor. After the play reaches vertex w the memory becomes
/// `update(m, w)`. Only situations reachable under the strategy are listed.
struct Strategy {
  struct Memory {
    std::uint32_t vertex = 0;
    std::uint32_t move = kNoMove;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> next;
    std::string note;
  };

  Player player = Player::Zero;
  std::vector<Memory> memory;
  std::uint32_t initialMemory = 0;

  std::uint32_t update(std::uint32_t m, std::uint32_t observed) const;
};

/// Merges memory states that behave identically (same vertex, same move,
/// equivalent updates) by partition refinement and drops unreachable ones.
/// Notes of merged states are replaced by their count.
Strategy minimize(const Strategy& s);

struct GameSolution {
  Player winner = Player::Zero;
  /// Strategy of the winner on the product game.
  Strategy strategy;
  std::size_t parityVertices = 0;
};

/// Solves the Rabin game from its initial vertex by reduction to a parity
/// game through index appearance records, then Zielonka's algorithm.
GameSolution solveGame(const RabinGame& game, std::size_t vertexCap = kDefaultStateCap);

struct SynthesisOptions {
  /// Start vertex; defaults to the graph's initial vertex.
  std::optional<VertexId> start;
  std::size_t stateCap = kDefaultStateCap;
};

struct SynthesisResult {
  Player winner = Player::Zero;
  /// Winner's strategy on the game graph, minimized; unmerged memory notes
  /// name the Rabin state and the appearance record.
  Strategy strategy;
  std::size_t buchiStates = 0;
  std::size_t rabinStates = 0;
  std::size_t rabinPairs = 0;
  std::size_t productVertices = 0;
  std::size_t parityVertices = 0;
};

/// Player 0 wins a play ρ iff V(λ(ρ), φ) ∈ targets, where λ(ρ) starts with
/// the label of the start vertex.
SynthesisResult synthesize(const GameGraph& g, const Formula& phi, const std::vector<TruthValue>& targets,
                           const SynthesisOptions& options = {});

/// Human-readable strategy table over `g`.
std::string strategyTable(const GameGraph& g, const Strategy& s);

}  // namespace rltl
