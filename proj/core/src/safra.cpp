#include <boost/dynamic_bitset.hpp>

#include <sstream>
#include <unordered_map>

#include "rltl/error.hpp"
#include "rltl/rabin.hpp"

namespace rltl {
namespace {

using Bits = boost::dynamic_bitset<>;

struct Node {
  std::uint32_t name = 0;
  Bits label;
  bool marked = false;
  std::vector<Node> children;
};

class Safra {
public:
  Safra(const Gba& nba, std::size_t stateCap)
      : nba_(nba), n_(nba.stateCount()), letters_(std::size_t{1} << nba.aps().size()), cap_(stateCap) {
    if (nba.acceptanceSetCount() > 1) throw Error("determinize expects at most one acceptance set");
    if (nba.aps().size() > kMaxDeterminizeAps) {
      throw ResourceLimit("too many atomic propositions to determinize");
    }
    accepting_.resize(n_);
    for (StateId s = 0; s < n_; ++s) {
      if (nba.acceptanceSetCount() == 0 || nba.inSet(s, 0)) accepting_.set(s);
    }
    post_.assign(n_ * letters_, Bits(n_));
    for (StateId s = 0; s < n_; ++s) {
      for (const Edge& e : nba.edges(s)) {
        for (Letter a = 0; a < letters_; ++a) {
          if (e.guard.matches(a)) post_[s * letters_ + a].set(e.dst);
        }
      }
    }
  }

  RabinAutomaton run() {
    const StateId init = nba_.requireInitial();
    Node root;
    root.name = 1;
    root.label = Bits(n_);
    root.label.set(init);
    intern(std::optional<Node>(std::move(root)));

    for (std::size_t i = 0; i < trees_.size(); ++i) {
      for (Letter a = 0; a < letters_; ++a) {
        std::optional<Node> next;
        if (trees_[i]) next = step(*trees_[i], a);
        delta_.push_back(intern(std::move(next)));
      }
    }
    return assemble();
  }

private:
  StateId intern(std::optional<Node> tree) {
    std::string key;
    if (tree) encode(*tree, key);
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<StateId>(trees_.size()));
    if (inserted) {
      if (trees_.size() >= cap_) throw ResourceLimit("Safra construction exceeded the state cap");
      trees_.push_back(std::move(tree));
    }
    return it->second;
  }

  static void encode(const Node& v, std::string& out) {
    auto put = [&](std::uint32_t x) { out.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(v.name);
    put(v.marked ? 1u : 0u);
    std::vector<Bits::block_type> blocks;
    boost::to_block_range(v.label, std::back_inserter(blocks));
    out.append(reinterpret_cast<const char*>(blocks.data()), blocks.size() * sizeof(Bits::block_type));
    put(static_cast<std::uint32_t>(v.children.size()));
    for (const Node& c : v.children) encode(c, out);
  }

  static void collectNames(const Node& v, std::vector<char>& used) {
    used[v.name] = 1;
    for (const Node& c : v.children) collectNames(c, used);
  }

  static void unmark(Node& v) {
    v.marked = false;
    for (Node& c : v.children) unmark(c);
  }

  void spawn(Node& v, std::vector<char>& used) {
    const std::size_t old = v.children.size();
    for (std::size_t i = 0; i < old; ++i) spawn(v.children[i], used);
    Bits inF = v.label & accepting_;
    if (inF.none()) return;
    Node child;
    std::uint32_t name = 1;
    while (used[name]) ++name;
    used[name] = 1;
    child.name = name;
    child.label = std::move(inF);
    v.children.push_back(std::move(child));
  }

  void advance(Node& v, Letter a) {
    Bits next(n_);
    for (auto s = v.label.find_first(); s != Bits::npos; s = v.label.find_next(s)) next |= post_[s * letters_ + a];
    v.label = std::move(next);
    for (Node& c : v.children) advance(c, a);
  }

  /// Keeps every NBA state only in the oldest branch that holds it.
  static void horizontal(Node& v, const Bits& allowed) {
    v.label &= allowed;
    Bits taken(v.label.size());
    for (Node& c : v.children) {
      horizontal(c, v.label - taken);
      taken |= c.label;
    }
  }

  static void prune(Node& v) {
    std::vector<Node> kept;
    for (Node& c : v.children) {
      if (c.label.none()) continue;
      prune(c);
      kept.push_back(std::move(c));
    }
    v.children = std::move(kept);
  }

  static void vertical(Node& v) {
    if (v.children.empty()) return;
    Bits covered(v.label.size());
    for (const Node& c : v.children) covered |= c.label;
    if (covered == v.label) {
      v.children.clear();
      v.marked = true;
      return;
    }
    for (Node& c : v.children) vertical(c);
  }

  std::optional<Node> step(Node tree, Letter a) {
    std::vector<char> used(2 * n_ + 2, 0);
    collectNames(tree, used);
    unmark(tree);
    spawn(tree, used);
    advance(tree, a);
    horizontal(tree, Bits(n_).set());
    if (tree.label.none()) return std::nullopt;
    prune(tree);
    vertical(tree);
    return tree;
  }

  void describe(const Node& v, std::ostream& os) const {
    os << v.name << '{';
    bool first = true;
    for (auto s = v.label.find_first(); s != Bits::npos; s = v.label.find_next(s)) {
      os << (first ? "" : ",") << s;
      first = false;
    }
    os << '}';
    if (v.marked) os << '!';
    if (!v.children.empty()) {
      os << '(';
      for (std::size_t i = 0; i < v.children.size(); ++i) {
        if (i) os << ' ';
        describe(v.children[i], os);
      }
      os << ')';
    }
  }

  static void namesOf(const Node& v, std::vector<std::pair<std::uint32_t, bool>>& out) {
    out.emplace_back(v.name, v.marked);
    for (const Node& c : v.children) namesOf(c, out);
  }

  RabinAutomaton assemble() {
    const std::size_t names = 2 * n_ + 1;
    std::vector<char> live(names, 0);
    std::vector<std::vector<std::pair<std::uint32_t, bool>>> present(trees_.size());
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      if (!trees_[i]) continue;
      namesOf(*trees_[i], present[i]);
      for (const auto& [name, marked] : present[i]) {
        if (marked) live[name] = 1;
      }
    }
    std::vector<std::uint32_t> pairOf(names, 0);
    std::size_t pairs = 0;
    for (std::size_t name = 0; name < names; ++name) {
      if (live[name]) pairOf[name] = static_cast<std::uint32_t>(pairs++);
    }

    RabinAutomaton out(nba_.aps(), pairs);
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      std::ostringstream os;
      if (trees_[i]) {
        describe(*trees_[i], os);
      } else {
        os << "empty";
      }
      const StateId s = out.addState(os.str());
      std::vector<char> here(names, 0);
      for (const auto& [name, marked] : present[i]) {
        here[name] = 1;
        if (marked && live[name]) out.addToF(s, pairOf[name]);
      }
      for (std::size_t name = 0; name < names; ++name) {
        if (live[name] && !here[name]) out.addToE(s, pairOf[name]);
      }
    }
    for (std::size_t i = 0; i < trees_.size(); ++i) {
      for (Letter a = 0; a < letters_; ++a) {
        out.setSuccessor(static_cast<StateId>(i), a, delta_[i * letters_ + a]);
      }
    }
    out.setInitial(0);
    return out;
  }

  const Gba& nba_;
  std::size_t n_;
  std::size_t letters_;
  std::size_t cap_;
  Bits accepting_;
  std::vector<Bits> post_;
  std::vector<std::optional<Node>> trees_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<StateId> delta_;
};

}  // namespace

RabinAutomaton determinize(const Gba& nba, std::size_t stateCap) {
  return Safra(nba, stateCap).run();
}

}  // namespace rltl
