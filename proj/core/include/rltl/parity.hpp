#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rltl/game.hpp"

namespace rltl {

/// Max-parity game: a play is won by Player 0 iff the largest priority seen
/// infinitely often is even.
struct ParityGame {
  std::vector<Player> owner;
  std::vector<std::uint32_t> priority;
  std::vector<std::vector<std::uint32_t>> successors;

  std::size_t size() const noexcept { return owner.size(); }
  std::uint32_t addVertex(Player p, std::uint32_t prio);
};

inline constexpr std::uint32_t kNoMove = std::numeric_limits<std::uint32_t>::max();

struct ParitySolution {
  std::vector<Player> winner;
  /// For every vertex owned by its winner, a successor that stays in the
  /// winning region and wins; kNoMove elsewhere.
  std::vector<std::uint32_t> move;
};

/// Zielonka's recursive algorithm. Every vertex needs a successor.
ParitySolution solveParity(const ParityGame& game);

}  // namespace rltl
