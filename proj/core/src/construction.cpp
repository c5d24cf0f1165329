#include "rltl/construction.hpp"

#include <algorithm>
#include <unordered_map>

#include "rltl/error.hpp"

namespace rltl {

namespace {

// A state stands for one position i of the input word and records the value
// of every closure entry at i. Entering a state reads the letter at i, so the
// atoms of a state always agree with the edge that led into it.
//
// Always and release nodes whose operand can have a first component that
// never catches up with its second one (see `prone`) get an extra bit
// tracking "component 2 of the operand holds from here on"; it is the
// witness for their second component.

struct Node {
  Op op;
  std::size_t a = 0;
  std::size_t b = 0;
  int aux = -1;
  Letter apBit = 0;
  std::vector<std::size_t> sets;
};

struct Expansion {
  std::vector<TruthValue> value;
  std::vector<char> aux;

  std::string key() const {
    std::string k;
    k.reserve(value.size() + aux.size());
    for (TruthValue v : value) k.push_back(static_cast<char>('0' + v.rank()));
    for (char c : aux) k.push_back(static_cast<char>('a' + c));
    return k;
  }
};

bool bit(TruthValue v, int k) { return v.component(k); }

class Builder {
public:
  Builder(const Formula& phi, const CompileOptions& options)
      : cl_(phi), aps_(options.aps ? *options.aps : atoms(phi)), cap_(options.stateCap), out_(prepareAps()) {
    if (phi.logic() != Logic::RLTL) throw Error("automaton construction expects an rltl formula");
    analyse();
  }

  Compilation run() {
    std::array<StateId, 5> q{};
    for (TruthValue b : TruthValue::all()) {
      q[static_cast<std::size_t>(b.rank())] = out_.addState("q" + b.str());
      expansion_.emplace_back();
      aux_.emplace_back();
    }
    out_.setValueStates(q);
    seedInitial(q);
    for (StateId s = 5; s < out_.stateCount(); ++s) expand(s);
    return Compilation{std::move(out_), std::move(cl_), std::move(expansion_)};
  }

private:
  std::vector<std::string> prepareAps() {
    std::sort(aps_.begin(), aps_.end());
    aps_.erase(std::unique(aps_.begin(), aps_.end()), aps_.end());
    return aps_;
  }

  void analyse() {
    const std::size_t m = cl_.size();
    nodes_.resize(m);
    std::vector<char> prone(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      Node& n = nodes_[i];
      const Formula& f = cl_[i];
      n.op = f.op();
      n.a = cl_.children(i)[0];
      n.b = cl_.children(i)[1];
      if (n.op == Op::Atom) {
        auto idx = out_.apIndex(f.name());
        if (!idx) throw AlphabetMismatch("atom '" + f.name() + "' is missing from the AP list");
        n.apBit = Letter{1} << *idx;
        atomNodes_.push_back(i);
      }
      if (f.isTemporal()) temporal_.push_back(i);
      switch (n.op) {
        case Op::Release: prone[i] = 1; break;
        case Op::Not: break;
        default:
          for (std::size_t c = 0; c < f.arity(); ++c) prone[i] = prone[i] || prone[cl_.children(i)[c]];
      }
      if ((n.op == Op::Always && prone[n.a]) || (n.op == Op::Release && prone[n.b])) {
        n.aux = static_cast<int>(auxTarget_.size());
        auxTarget_.push_back(n.op == Op::Always ? n.a : n.b);
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      Node& n = nodes_[i];
      if (!cl_[i].isTemporal() || n.op == Op::Next) continue;
      for (int k = 1; k <= 4; ++k) {
        n.sets.push_back(out_.addAcceptanceSet(cl_[i].str() + ":" + std::to_string(k)));
      }
      if (n.aux >= 0) n.sets.push_back(out_.addAcceptanceSet(cl_[i].str() + ":aux"));
    }
  }

  /// Values of the non-temporal entries follow from the atoms and from the
  /// values of their children.
  void derive(Expansion& e, Letter letter) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      auto& v = e.value;
      switch (n.op) {
        case Op::Atom: v[i] = (letter & n.apBit) ? TruthValue::top() : TruthValue::bottom(); break;
        case Op::True: v[i] = TruthValue::top(); break;
        case Op::False: v[i] = TruthValue::bottom(); break;
        case Op::Not: v[i] = negate(v[n.a]); break;
        case Op::And: v[i] = meet(v[n.a], v[n.b]); break;
        case Op::Or: v[i] = join(v[n.a], v[n.b]); break;
        case Op::Implies: v[i] = implies(v[n.a], v[n.b]); break;
        default: break;
      }
    }
  }

  /// Expansion equation of temporal node t between the current state and a
  /// candidate value `nx` for t at the next position.
  bool equationHolds(std::size_t t, const Expansion& e, TruthValue nx) const {
    const Node& n = nodes_[t];
    const TruthValue now = e.value[t];
    const TruthValue x = e.value[n.a];
    const TruthValue y = n.op == Op::Release || n.op == Op::Until ? e.value[n.b] : TruthValue::top();
    const bool c = n.aux >= 0 && e.aux[static_cast<std::size_t>(n.aux)];
    std::array<bool, 4> want{};
    switch (n.op) {
      case Op::Eventually:
        for (int k = 1; k <= 4; ++k) want[k - 1] = bit(x, k) || bit(nx, k);
        break;
      case Op::Always:
        want[0] = bit(x, 1) && bit(nx, 1);
        want[1] = bit(now, 1) || c || bit(nx, 2);
        want[2] = bit(now, 4) && bit(nx, 3);
        want[3] = bit(x, 4) || bit(nx, 4);
        break;
      case Op::Release:
        want[0] = bit(y, 1) && (bit(x, 1) || bit(nx, 1));
        want[1] = bit(now, 1) || bit(x, 2) || c || bit(nx, 2);
        want[2] = bit(now, 4) && (bit(x, 3) || bit(nx, 3));
        want[3] = bit(y, 4) || bit(x, 4) || bit(nx, 4);
        break;
      case Op::Until:
        for (int k = 1; k <= 4; ++k) want[k - 1] = bit(y, k) || (bit(x, k) && bit(nx, k));
        break;
      default:
        return true;
    }
    for (int k = 1; k <= 4; ++k) {
      if (want[k - 1] != bit(now, k)) return false;
    }
    return true;
  }

  bool inSet(const Node& n, std::size_t t, std::size_t which, const Expansion& e) const {
    const TruthValue v = e.value[t];
    const TruthValue x = e.value[n.a];
    const TruthValue y = n.op == Op::Release || n.op == Op::Until ? e.value[n.b] : TruthValue::top();
    const bool c = n.aux >= 0 && e.aux[static_cast<std::size_t>(n.aux)];
    if (which == 4) {
      // The aux bit claims "component 2 of its target holds forever".
      return c || !bit(e.value[auxTarget_[static_cast<std::size_t>(n.aux)]], 2);
    }
    const int k = static_cast<int>(which) + 1;
    switch (n.op) {
      case Op::Eventually: return !bit(v, k) || bit(x, k);
      case Op::Until: return !bit(v, k) || bit(y, k);
      case Op::Always:
        switch (k) {
          case 1: return bit(v, 1) || !bit(x, 1);
          case 2: return !bit(v, 2) || (n.aux >= 0 ? c : bit(v, 1));
          case 3: return bit(v, 3) || !bit(v, 4);
          default: return !bit(v, 4) || bit(x, 4);
        }
      case Op::Release:
        switch (k) {
          case 1: return bit(v, 1) || !bit(y, 1);
          case 2: return !bit(v, 2) || bit(v, 1) || bit(x, 2) || c;
          case 3: return bit(v, 3) || !bit(v, 4);
          default: return !bit(v, 4) || bit(y, 4) || bit(x, 4);
        }
      default: return false;
    }
  }

  StateId intern(Expansion&& e) {
    std::string key = e.key();
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    if (out_.stateCount() >= cap_) throw ResourceLimit("automaton exceeds the state cap");
    std::string note;
    for (std::size_t i = 0; i < e.value.size(); ++i) {
      if (i) note += ' ';
      note += e.value[i].str();
    }
    const StateId s = out_.addState(std::move(note));
    for (std::size_t t : temporal_) {
      const Node& n = nodes_[t];
      for (std::size_t w = 0; w < n.sets.size(); ++w) {
        if (inSet(n, t, w, e)) out_.addToSet(s, n.sets[w]);
      }
    }
    ids_.emplace(std::move(key), s);
    expansion_.push_back(e.value);
    aux_.push_back(std::move(e.aux));
    return s;
  }

  /// Calls `visit(letter, guard)` for every letter over the formula's atoms.
  template <class Visit>
  void forEachLetter(Visit visit) const {
    const std::size_t n = atomNodes_.size();
    Letter care = 0;
    for (std::size_t i : atomNodes_) care |= nodes_[i].apBit;
    for (Letter m = 0; m < (Letter{1} << n); ++m) {
      Letter value = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (m >> j & 1) value |= nodes_[atomNodes_[j]].apBit;
      }
      visit(value, Guard{care, value});
    }
  }

  /// Calls `visit(pick)` for every tuple drawing one entry from each list.
  template <class Visit>
  static void forEachChoice(const std::vector<std::vector<std::uint8_t>>& lists, Visit visit) {
    for (const auto& l : lists) {
      if (l.empty()) return;
    }
    std::vector<std::size_t> idx(lists.size(), 0);
    std::vector<std::uint8_t> pick(lists.size());
    while (true) {
      for (std::size_t i = 0; i < lists.size(); ++i) pick[i] = lists[i][idx[i]];
      visit(pick);
      std::size_t i = 0;
      while (i < lists.size() && ++idx[i] == lists[i].size()) idx[i++] = 0;
      if (i == lists.size()) return;
    }
  }

  Expansion blank() const {
    return Expansion{std::vector<TruthValue>(nodes_.size()), std::vector<char>(auxTarget_.size(), 0)};
  }

  void fill(Expansion& e, const std::vector<std::uint8_t>& pick, Letter letter) const {
    for (std::size_t j = 0; j < temporal_.size(); ++j) e.value[temporal_[j]] = TruthValue::fromRank(pick[j]);
    for (std::size_t k = 0; k < auxTarget_.size(); ++k) e.aux[k] = static_cast<char>(pick[temporal_.size() + k]);
    derive(e, letter);
  }

  void seedInitial(const std::array<StateId, 5>& q) {
    std::vector<std::vector<std::uint8_t>> lists(temporal_.size(), {0, 1, 2, 3, 4});
    lists.insert(lists.end(), auxTarget_.size(), {0, 1});
    const std::size_t root = cl_.rootIndex();
    forEachLetter([&](Letter letter, Guard guard) {
      forEachChoice(lists, [&](const std::vector<std::uint8_t>& pick) {
        Expansion e = blank();
        fill(e, pick, letter);
        const StateId from = q[static_cast<std::size_t>(e.value[root].rank())];
        out_.addEdge(from, guard, intern(std::move(e)));
      });
    });
  }

  void expand(StateId s) {
    const Expansion cur{expansion_[s], aux_[s]};
    std::vector<std::vector<std::uint8_t>> lists;
    for (std::size_t t : temporal_) {
      std::vector<std::uint8_t> ok;
      for (TruthValue nx : TruthValue::all()) {
        if (nodes_[t].op == Op::Next || equationHolds(t, cur, nx)) ok.push_back(static_cast<std::uint8_t>(nx.rank()));
      }
      lists.push_back(std::move(ok));
    }
    for (std::size_t k = 0; k < auxTarget_.size(); ++k) {
      const bool x2 = bit(cur.value[auxTarget_[k]], 2);
      std::vector<std::uint8_t> ok;
      for (std::uint8_t c : {0, 1}) {
        if ((cur.aux[k] != 0) == (x2 && c)) ok.push_back(c);
      }
      lists.push_back(std::move(ok));
    }
    forEachLetter([&](Letter letter, Guard guard) {
      forEachChoice(lists, [&](const std::vector<std::uint8_t>& pick) {
        Expansion e = blank();
        fill(e, pick, letter);
        for (std::size_t t : temporal_) {
          if (nodes_[t].op == Op::Next && cur.value[t] != e.value[nodes_[t].a]) return;
        }
        out_.addEdge(s, guard, intern(std::move(e)));
      });
    });
  }

  Closure cl_;
  std::vector<std::string> aps_;
  std::size_t cap_;
  Gba out_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> temporal_;
  std::vector<std::size_t> atomNodes_;
  std::vector<std::size_t> auxTarget_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<std::vector<TruthValue>> expansion_;
  std::vector<std::vector<char>> aux_;
};

}  // namespace

Compilation compile(const Formula& phi, const CompileOptions& options) { return Builder(phi, options).run(); }

}  // namespace rltl
