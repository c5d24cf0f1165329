#include "rltl/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "rltl/error.hpp"
#include "rltl/graph.hpp"

namespace rltl {

std::optional<Guard> conjoin(const Guard& a, const Guard& b) noexcept {
  if (((a.value ^ b.value) & a.care & b.care) != 0) return std::nullopt;
  return Guard{a.care | b.care, a.value | b.value};
}

Gba::Gba(std::vector<std::string> aps) : aps_(std::move(aps)) {
  if (aps_.size() > kMaxAtoms) throw Error("too many atomic propositions");
  for (std::size_t i = 1; i < aps_.size(); ++i) {
    if (!(aps_[i - 1] < aps_[i])) throw Error("AP list must be sorted and duplicate-free");
  }
}

std::optional<std::size_t> Gba::apIndex(const std::string& name) const {
  auto it = std::lower_bound(aps_.begin(), aps_.end(), name);
  if (it == aps_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - aps_.begin());
}

StateId Gba::addState(std::string annotation) {
  edges_.emplace_back();
  annotations_.push_back(std::move(annotation));
  sets_.emplace_back();
  return static_cast<StateId>(edges_.size() - 1);
}

std::size_t Gba::edgeCount() const noexcept {
  std::size_t n = 0;
  for (const auto& e : edges_) n += e.size();
  return n;
}

void Gba::addEdge(StateId src, Guard guard, StateId dst) {
  if (src >= stateCount() || dst >= stateCount()) throw std::out_of_range("edge endpoint out of range");
  edges_[src].push_back({guard, dst});
}

std::size_t Gba::addAcceptanceSet(std::string label) {
  setLabels_.push_back(std::move(label));
  return setLabels_.size() - 1;
}

void Gba::addToSet(StateId s, std::size_t set) {
  if (set >= acceptanceSetCount()) throw std::out_of_range("acceptance set out of range");
  auto& v = sets_.at(s);
  const auto id = static_cast<std::uint32_t>(set);
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) v.insert(it, id);
}

bool Gba::inSet(StateId s, std::size_t set) const {
  const auto& v = sets_.at(s);
  return std::binary_search(v.begin(), v.end(), static_cast<std::uint32_t>(set));
}

void Gba::setInitial(StateId s) {
  if (s >= stateCount()) throw std::out_of_range("initial state out of range");
  initial_ = s;
}

StateId Gba::valueState(TruthValue b) const {
  if (!valueStates_) throw MissingDesignatedState("automaton has no designated state for " + b.str());
  return (*valueStates_)[static_cast<std::size_t>(b.rank())];
}

void Gba::setValueStates(const std::array<StateId, 5>& states) {
  for (StateId s : states) {
    if (s >= stateCount()) throw std::out_of_range("designated state out of range");
  }
  valueStates_ = states;
}

StateId Gba::requireInitial() const {
  if (!initial_) throw Error("automaton has no initial state");
  return *initial_;
}

namespace {

Adjacency adjacency(const Gba& a) {
  Adjacency adj(a.stateCount());
  for (StateId s = 0; s < a.stateCount(); ++s) {
    for (const Edge& e : a.edges(s)) adj[s].push_back(e.dst);
  }
  return adj;
}

/// Components whose states can stay forever while meeting every set.
std::vector<char> acceptingComponents(const Gba& a, const Sccs& sccs) {
  const std::size_t k = a.acceptanceSetCount();
  std::vector<char> nontrivial(sccs.count, 0);
  std::vector<std::vector<char>> hits(sccs.count, std::vector<char>(k, 0));
  for (StateId s = 0; s < a.stateCount(); ++s) {
    const auto c = sccs.component[s];
    for (const Edge& e : a.edges(s)) {
      if (sccs.component[e.dst] == c) nontrivial[c] = 1;
    }
    for (std::uint32_t set : a.setsOf(s)) hits[c][set] = 1;
  }
  std::vector<char> accepting(sccs.count, 0);
  for (std::uint32_t c = 0; c < sccs.count; ++c) {
    accepting[c] = nontrivial[c] && std::all_of(hits[c].begin(), hits[c].end(), [](char x) { return x != 0; });
  }
  return accepting;
}

struct Step {
  StateId src;
  Guard guard;
};

/// Shortest path from `from` to a state satisfying `target`, moving only
/// through states accepted by `allowed`. With `nonempty`, the path has at
/// least one edge even if `from` already satisfies the target.
template <class Target, class Allowed>
std::vector<Step> shortestPath(const Gba& a, StateId from, Target target, Allowed allowed, bool nonempty,
                               StateId* reached) {
  *reached = from;
  if (!nonempty && target(from)) return {};
  // `from` is expanded first but not marked, so a path may return to it.
  std::unordered_map<StateId, std::pair<StateId, Guard>> parent;
  std::deque<StateId> queue{from};
  while (!queue.empty()) {
    const StateId v = queue.front();
    queue.pop_front();
    for (const Edge& e : a.edges(v)) {
      if (!allowed(e.dst) || parent.count(e.dst)) continue;
      parent.emplace(e.dst, std::make_pair(v, e.guard));
      if (target(e.dst)) {
        std::vector<Step> path;
        StateId w = e.dst;
        do {
          const auto& [src, guard] = parent.at(w);
          path.push_back({src, guard});
          w = src;
        } while (w != from);
        std::reverse(path.begin(), path.end());
        *reached = e.dst;
        return path;
      }
      queue.push_back(e.dst);
    }
  }
  throw Error("internal error: no path inside component");
}

}  // namespace

Gba restrictInitial(const Gba& a, TruthValue b) {
  const StateId q = a.valueState(b);
  Gba out = a;
  out.clearValueStates();
  out.setInitial(q);
  return out;
}

Gba unionOverValues(const Gba& a, const std::vector<TruthValue>& values) {
  std::vector<StateId> sources;
  for (TruthValue b : values) sources.push_back(a.valueState(b));
  Gba out = a;
  const StateId fresh = out.addState("union");
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (StateId q : sources) {
    for (const Edge& e : a.edges(q)) out.addEdge(fresh, e.guard, e.dst);
  }
  out.setInitial(fresh);
  return out;
}

Gba product(const Gba& a, const Gba& b, std::size_t stateCap) {
  if (a.aps() != b.aps()) throw AlphabetMismatch("product of automata over different AP lists");
  Gba out(a.aps());
  const std::size_t ka = a.acceptanceSetCount();
  for (std::size_t i = 0; i < ka; ++i) out.addAcceptanceSet(a.acceptanceLabel(i));
  for (std::size_t i = 0; i < b.acceptanceSetCount(); ++i) out.addAcceptanceSet(b.acceptanceLabel(i));

  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> pairs;
  auto intern = [&](StateId x, StateId y) {
    const std::uint64_t key = (std::uint64_t{x} << 32) | y;
    auto [it, inserted] = ids.emplace(key, 0);
    if (inserted) {
      if (out.stateCount() >= stateCap) throw ResourceLimit("product exceeds the state cap");
      it->second = out.addState();
      pairs.emplace_back(x, y);
      for (std::uint32_t s : a.setsOf(x)) out.addToSet(it->second, s);
      for (std::uint32_t s : b.setsOf(y)) out.addToSet(it->second, ka + s);
    }
    return it->second;
  };
  out.setInitial(intern(a.requireInitial(), b.requireInitial()));
  for (StateId s = 0; s < out.stateCount(); ++s) {
    const auto [x, y] = pairs[s];
    for (const Edge& ea : a.edges(x)) {
      for (const Edge& eb : b.edges(y)) {
        if (auto g = conjoin(ea.guard, eb.guard)) out.addEdge(s, *g, intern(ea.dst, eb.dst));
      }
    }
  }
  return out;
}

EmptinessResult isEmpty(const Gba& a) {
  const StateId init = a.requireInitial();
  const Adjacency adj = adjacency(a);
  const auto reach = reachableFrom(adj, init);
  const Sccs sccs = stronglyConnectedComponents(adj);
  const auto accepting = acceptingComponents(a, sccs);

  std::optional<std::uint32_t> goal;
  for (StateId s = 0; s < a.stateCount() && !goal; ++s) {
    if (reach[s] && accepting[sccs.component[s]]) goal = sccs.component[s];
  }
  EmptinessResult result;
  if (!goal) return result;
  result.empty = false;

  auto anywhere = [](StateId) { return true; };
  auto inGoal = [&](StateId s) { return sccs.component[s] == *goal; };

  StateId entry = init;
  const std::vector<Step> stem = shortestPath(a, init, inGoal, anywhere, false, &entry);

  std::vector<Step> cycle;
  StateId at = entry;
  for (std::size_t set = 0; set < a.acceptanceSetCount(); ++set) {
    auto leg = shortestPath(a, at, [&](StateId s) { return a.inSet(s, set); }, inGoal, false, &at);
    cycle.insert(cycle.end(), leg.begin(), leg.end());
  }
  auto back = shortestPath(a, at, [&](StateId s) { return s == entry; }, inGoal, cycle.empty(), &at);
  cycle.insert(cycle.end(), back.begin(), back.end());

  std::vector<Letter> prefix, loop;
  for (const Step& st : stem) {
    prefix.push_back(st.guard.witness());
    result.runPrefix.push_back(st.src);
  }
  for (const Step& st : cycle) {
    loop.push_back(st.guard.witness());
    result.runCycle.push_back(st.src);
  }
  result.witness = LassoWord(a.aps(), std::move(prefix), std::move(loop));
  return result;
}

Gba lassoAutomaton(const LassoWord& word, const std::vector<std::string>& aps) {
  const LassoWord w = word.withAlphabet(aps);
  Gba out(w.alphabet());
  const Letter all = aps.size() == kMaxAtoms ? ~Letter{0} : (Letter{1} << aps.size()) - 1;
  for (std::size_t i = 0; i < w.positions(); ++i) out.addState();
  for (std::size_t i = 0; i < w.positions(); ++i) {
    out.addEdge(static_cast<StateId>(i), Guard{all, w.at(i)}, static_cast<StateId>(w.next(i)));
  }
  out.setInitial(0);
  return out;
}

Gba universalAutomaton(const std::vector<std::string>& aps) {
  Gba out(aps);
  const StateId s = out.addState();
  out.addEdge(s, Guard{}, s);
  out.setInitial(s);
  return out;
}

bool memberLasso(const Gba& a, const LassoWord& word) {
  return !isEmpty(product(a, lassoAutomaton(word, a.aps()))).empty;
}

Gba degeneralize(const Gba& a) {
  const std::size_t k = a.acceptanceSetCount();
  const std::size_t rounds = std::max<std::size_t>(k, 1);
  Gba out(a.aps());
  out.addAcceptanceSet(k == 0 ? "all" : "round");
  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, std::uint32_t>> states;
  auto intern = [&](StateId s, std::uint32_t i) {
    const std::uint64_t key = std::uint64_t{s} * rounds + i;
    auto [it, inserted] = ids.emplace(key, 0);
    if (inserted) {
      it->second = out.addState(a.annotation(s));
      states.emplace_back(s, i);
      if (k == 0 || (i == k - 1 && a.inSet(s, i))) out.addToSet(it->second, 0);
    }
    return it->second;
  };
  out.setInitial(intern(a.requireInitial(), 0));
  for (StateId v = 0; v < out.stateCount(); ++v) {
    const auto [s, i] = states[v];
    const std::uint32_t j = (k > 0 && a.inSet(s, i)) ? static_cast<std::uint32_t>((i + 1) % k) : i;
    for (const Edge& e : a.edges(s)) out.addEdge(v, e.guard, intern(e.dst, j));
  }
  return out;
}

Gba trim(const Gba& a) {
  const StateId init = a.requireInitial();
  const Adjacency adj = adjacency(a);
  const auto reach = reachableFrom(adj, init);
  const Sccs sccs = stronglyConnectedComponents(adj);
  const auto accepting = acceptingComponents(a, sccs);

  Adjacency reverse(a.stateCount());
  for (StateId s = 0; s < a.stateCount(); ++s) {
    for (std::uint32_t t : adj[s]) reverse[t].push_back(s);
  }
  std::vector<char> productive(a.stateCount(), 0);
  std::vector<StateId> work;
  for (StateId s = 0; s < a.stateCount(); ++s) {
    if (accepting[sccs.component[s]]) {
      productive[s] = 1;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    const StateId s = work.back();
    work.pop_back();
    for (std::uint32_t t : reverse[s]) {
      if (!productive[t]) {
        productive[t] = 1;
        work.push_back(t);
      }
    }
  }

  Gba out(a.aps());
  for (std::size_t i = 0; i < a.acceptanceSetCount(); ++i) out.addAcceptanceSet(a.acceptanceLabel(i));
  constexpr StateId kDropped = ~StateId{0};
  std::vector<StateId> map(a.stateCount(), kDropped);
  for (StateId s = 0; s < a.stateCount(); ++s) {
    if (!reach[s] || !productive[s]) continue;
    map[s] = out.addState(a.annotation(s));
    for (std::uint32_t set : a.setsOf(s)) out.addToSet(map[s], set);
  }
  if (map[init] == kDropped) {
    out.setInitial(out.addState(a.annotation(init)));
    return out;
  }
  for (StateId s = 0; s < a.stateCount(); ++s) {
    if (map[s] == kDropped) continue;
    for (const Edge& e : a.edges(s)) {
      if (map[e.dst] != kDropped) out.addEdge(map[s], e.guard, map[e.dst]);
    }
  }
  out.setInitial(map[init]);
  return out;
}

}  // namespace rltl
