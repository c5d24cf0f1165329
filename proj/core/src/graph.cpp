#include "rltl/graph.hpp"

#include <algorithm>
#include <limits>

namespace rltl {

Sccs stronglyConnectedComponents(const Adjacency& successors) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const auto n = static_cast<std::uint32_t>(successors.size());
  Sccs out;
  out.component.assign(n, kUnvisited);
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<char> onStack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> frames;
  std::uint32_t counter = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    onStack[root] = 1;
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next < successors[v].size()) {
        const std::uint32_t w = successors[v][next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          onStack[w] = 1;
          frames.emplace_back(w, 0);
        } else if (onStack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          onStack[w] = 0;
          out.component[w] = out.count;
        } while (w != done);
        ++out.count;
      }
    }
  }
  return out;
}

std::vector<char> reachableFrom(const Adjacency& successors, std::uint32_t from) {
  std::vector<char> seen(successors.size(), 0);
  std::vector<std::uint32_t> work{from};
  seen[from] = 1;
  while (!work.empty()) {
    const std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t w : successors[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        work.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace rltl
