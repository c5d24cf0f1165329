#include "rltl/synthesis.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "rltl/construction.hpp"
#include "rltl/error.hpp"

namespace rltl {

Gba buildWinningAutomaton(const Formula& phi, const std::vector<TruthValue>& targets,
                          const std::optional<std::vector<std::string>>& aps, std::size_t stateCap) {
  CompileOptions options;
  options.aps = aps;
  options.stateCap = stateCap;
  const Gba a = buildAutomaton(phi, options);
  return trim(degeneralize(unionOverValues(a, targets)));
}

RabinGame buildProductGame(const GameGraph& g, const RabinAutomaton& c, VertexId v0, std::size_t vertexCap) {
  if (g.aps() != c.aps()) throw AlphabetMismatch("game and automaton use different AP lists");
  if (v0 >= g.size()) throw Error("start vertex out of range");
  RabinGame out;
  out.pairCount = c.pairCount();
  for (StateId q = 0; q < c.stateCount(); ++q) {
    out.finiteOf.push_back(c.eOf(q));
    out.infiniteOf.push_back(c.fOf(q));
  }
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  auto intern = [&](VertexId v, StateId q) {
    const std::uint64_t key = (std::uint64_t{v} << 32) | q;
    auto [it, inserted] = ids.emplace(key, static_cast<std::uint32_t>(out.size()));
    if (inserted) {
      if (out.size() >= vertexCap) throw ResourceLimit("product game exceeded the vertex cap");
      out.owner.push_back(g.owner(v));
      out.vertex.push_back(v);
      out.state.push_back(q);
      out.successors.emplace_back();
    }
    return it->second;
  };
  out.initial = intern(v0, c.initial());
  for (std::uint32_t x = 0; x < out.size(); ++x) {
    const VertexId v = out.vertex[x];
    const StateId q = c.successor(out.state[x], g.label(v));
    for (VertexId w : g.successors(v)) {
      const std::uint32_t y = intern(w, q);
      out.successors[x].push_back(y);
    }
  }
  return out;
}

std::uint32_t Strategy::update(std::uint32_t m, std::uint32_t observed) const {
  for (const auto& [vertex, target] : memory.at(m).next) {
    if (vertex == observed) return target;
  }
  throw Error("strategy has no memory update for this move");
}

Strategy minimize(const Strategy& s) {
  const std::size_t n = s.memory.size();
  std::vector<std::uint32_t> cls(n, 0);
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    for (std::size_t m = 0; m < n; ++m) {
      const Strategy::Memory& mem = s.memory[m];
      std::vector<std::uint32_t> signature{cls[m], mem.vertex, mem.move};
      auto updates = mem.next;
      std::sort(updates.begin(), updates.end());
      for (const auto& [observed, target] : updates) {
        signature.push_back(observed);
        signature.push_back(cls[target]);
      }
      next[m] = ids.emplace(std::move(signature), static_cast<std::uint32_t>(ids.size())).first->second;
    }
    cls = std::move(next);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  // Renumber classes in order of first appearance from the initial memory.
  Strategy out;
  out.player = s.player;
  std::vector<std::uint32_t> id(classes, kNoMove);
  std::vector<char> reachable(n, 0);
  std::vector<std::uint32_t> work{static_cast<std::uint32_t>(s.initialMemory)};
  reachable[s.initialMemory] = 1;
  while (!work.empty()) {
    const std::uint32_t m = work.back();
    work.pop_back();
    for (const auto& [observed, target] : s.memory[m].next) {
      if (!reachable[target]) {
        reachable[target] = 1;
        work.push_back(target);
      }
    }
  }
  std::vector<std::size_t> members(classes, 0);
  for (std::size_t m = 0; m < n; ++m) members[cls[m]] += static_cast<std::size_t>(reachable[m]);
  std::vector<std::uint32_t> order{static_cast<std::uint32_t>(s.initialMemory)};
  id[cls[s.initialMemory]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Strategy::Memory& mem = s.memory[order[i]];
    Strategy::Memory copy;
    copy.vertex = mem.vertex;
    copy.move = mem.move;
    const std::size_t size = members[cls[order[i]]];
    copy.note = size == 1 ? mem.note : std::to_string(size) + " states";
    for (const auto& [observed, target] : mem.next) {
      if (id[cls[target]] == kNoMove) {
        id[cls[target]] = static_cast<std::uint32_t>(order.size());
        order.push_back(target);
      }
      copy.next.emplace_back(observed, id[cls[target]]);
    }
    out.memory.push_back(std::move(copy));
  }
  out.initialMemory = 0;
  return out;
}

namespace {

/// Appearance record over the pairs that can be satisfied at all.
class RecordReduction {
public:
  RecordReduction(const RabinGame& game, std::size_t cap)
      : game_(game), cap_(cap), slot_(game.pairCount, kNoMove) {
    for (std::uint32_t x = 0; x < game.size(); ++x) {
      for (std::uint32_t i : game.infiniteOf.at(game.state[x])) {
        if (slot_[i] == kNoMove) slot_[i] = static_cast<std::uint32_t>(pairs_++);
      }
    }
    if (pairs_ > 255) throw ResourceLimit("too many Rabin pairs for the appearance record");
  }

  ParityGame build() {
    std::string identity(pairs_, '\0');
    for (std::size_t i = 0; i < pairs_; ++i) identity[i] = static_cast<char>(i);
    intern(game_.initial, identity);
    for (std::uint32_t x = 0; x < parity_.size(); ++x) {
      const auto [p, record] = nodes_[x];
      const auto [priority, next] = visit(p, record);
      parity_.priority[x] = priority;
      for (std::uint32_t y : game_.successors[p]) {
        const std::uint32_t z = intern(y, next);
        parity_.successors[x].push_back(z);
      }
    }
    return parity_;
  }

  std::uint32_t productVertex(std::uint32_t x) const { return nodes_[x].first; }

  std::string note(std::uint32_t x) const {
    std::ostringstream os;
    os << "q" << game_.state[nodes_[x].first] << " [";
    const std::string& record = nodes_[x].second;
    for (std::size_t i = 0; i < record.size(); ++i) os << (i ? " " : "") << static_cast<int>(record[i]);
    os << ']';
    return os.str();
  }

private:
  std::uint32_t intern(std::uint32_t p, const std::string& record) {
    std::string key = record;
    key.append(reinterpret_cast<const char*>(&p), sizeof p);
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<std::uint32_t>(parity_.size()));
    if (inserted) {
      if (parity_.size() >= cap_) throw ResourceLimit("parity game exceeded the vertex cap");
      parity_.addVertex(game_.owner[p], 0);
      nodes_.emplace_back(p, record);
    }
    return it->second;
  }

  /// Priority of visiting product vertex `p` with `record`, and the record
  /// afterwards: pairs whose E-set is hit move to the front.
  std::pair<std::uint32_t, std::string> visit(std::uint32_t p, const std::string& record) const {
    const StateId q = game_.state[p];
    std::vector<char> inE(pairs_, 0), inF(pairs_, 0);
    for (std::uint32_t i : game_.finiteOf[q]) {
      if (slot_[i] != kNoMove) inE[slot_[i]] = 1;
    }
    for (std::uint32_t i : game_.infiniteOf[q]) inF[slot_[i]] = 1;
    std::size_t e = 0, f = 0;
    std::string hit, rest;
    for (std::size_t pos = 0; pos < record.size(); ++pos) {
      const auto pair = static_cast<unsigned char>(record[pos]);
      if (inE[pair]) {
        e = pos + 1;
        hit += record[pos];
      } else {
        rest += record[pos];
      }
      if (inF[pair]) f = pos + 1;
    }
    const std::size_t priority = f > e ? 2 * f : (e > 0 ? 2 * e + 1 : 1);
    return {static_cast<std::uint32_t>(priority), hit + rest};
  }

  const RabinGame& game_;
  std::size_t cap_;
  std::vector<std::uint32_t> slot_;
  std::size_t pairs_ = 0;
  ParityGame parity_;
  std::vector<std::pair<std::uint32_t, std::string>> nodes_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

}  // namespace

GameSolution solveGame(const RabinGame& game, std::size_t vertexCap) {
  RecordReduction reduction(game, vertexCap);
  const ParityGame parity = reduction.build();
  const ParitySolution solution = solveParity(parity);

  GameSolution out;
  out.parityVertices = parity.size();
  out.winner = solution.winner[0];
  out.strategy.player = out.winner;

  std::unordered_map<std::uint32_t, std::uint32_t> memoryOf;
  std::vector<std::uint32_t> order;
  auto intern = [&](std::uint32_t x) {
    auto [it, inserted] = memoryOf.emplace(x, static_cast<std::uint32_t>(order.size()));
    if (inserted) {
      order.push_back(x);
      Strategy::Memory m;
      m.vertex = reduction.productVertex(x);
      m.note = reduction.note(x);
      out.strategy.memory.push_back(std::move(m));
    }
    return it->second;
  };
  out.strategy.initialMemory = intern(0);
  for (std::size_t m = 0; m < order.size(); ++m) {
    const std::uint32_t x = order[m];
    std::vector<std::uint32_t> choices;
    if (parity.owner[x] == out.winner) {
      if (solution.move[x] == kNoMove) throw Error("parity solver left a winning vertex without a move");
      choices.push_back(solution.move[x]);
      out.strategy.memory[m].move = reduction.productVertex(solution.move[x]);
    } else {
      choices = parity.successors[x];
    }
    for (std::uint32_t y : choices) {
      const std::uint32_t target = intern(y);
      out.strategy.memory[m].next.emplace_back(reduction.productVertex(y), target);
    }
  }
  return out;
}

SynthesisResult synthesize(const GameGraph& g, const Formula& phi, const std::vector<TruthValue>& targets,
                           const SynthesisOptions& options) {
  g.validate();
  const VertexId start = options.start.value_or(g.initial());
  const Gba nba = buildWinningAutomaton(phi, targets, g.aps(), options.stateCap);
  const RabinAutomaton dra = determinize(nba, options.stateCap);
  const RabinGame game = buildProductGame(g, dra, start, options.stateCap);
  GameSolution solved = solveGame(game, options.stateCap);

  SynthesisResult out;
  out.winner = solved.winner;
  out.buchiStates = nba.stateCount();
  out.rabinStates = dra.stateCount();
  out.rabinPairs = dra.pairCount();
  out.productVertices = game.size();
  out.parityVertices = solved.parityVertices;
  for (Strategy::Memory& m : solved.strategy.memory) {
    m.vertex = game.vertex[m.vertex];
    if (m.move != kNoMove) m.move = game.vertex[m.move];
    for (auto& [observed, target] : m.next) observed = game.vertex[observed];
  }
  out.strategy = minimize(solved.strategy);
  return out;
}

std::string strategyTable(const GameGraph& g, const Strategy& s) {
  std::ostringstream os;
  os << "player " << static_cast<int>(s.player) << ", initial memory m" << s.initialMemory << '\n';
  for (std::size_t m = 0; m < s.memory.size(); ++m) {
    const Strategy::Memory& mem = s.memory[m];
    os << 'm' << m << " at " << g.name(mem.vertex);
    if (mem.move != kNoMove) os << " -> " << g.name(mem.move);
    os << " |";
    for (const auto& [observed, target] : mem.next) os << ' ' << g.name(observed) << ":m" << target;
    if (!mem.note.empty()) os << "  (" << mem.note << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace rltl
