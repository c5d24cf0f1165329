#pragma once

#include <cstdint>
#include <vector>

namespace rltl {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct Sccs {
  /// Component number of every vertex. Components are numbered in reverse
  /// topological order: no edge leads from component i to a component > i.
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

/// Tarjan's algorithm without recursion.
Sccs stronglyConnectedComponents(const Adjacency& successors);

/// Vertices reachable from `from` (inclusive), as a membership vector.
std::vector<char> reachableFrom(const Adjacency& successors, std::uint32_t from);

}  // namespace rltl
