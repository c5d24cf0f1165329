#include "rltl/semantics.hpp"

#include <array>
#include <stdexcept>

#include "rltl/error.hpp"

namespace rltl {

namespace {

void requireLogic(const Formula& phi, Logic expected) {
  if (phi.logic() != expected) {
    throw Error(std::string("formula is tagged ") + logicName(phi.logic()) + ", expected " + logicName(expected));
  }
}

std::vector<std::size_t> atomColumns(const Closure& cl, const LassoWord& sigma) {
  std::vector<std::size_t> cols(cl.size(), 0);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (cl[i].op() != Op::Atom) continue;
    auto idx = sigma.atomIndex(cl[i].name());
    if (!idx) throw AlphabetMismatch("atom '" + cl[i].name() + "' is not in the word's alphabet");
    cols[i] = *idx;
  }
  return cols;
}

// --- classical valuation by backward fixpoint iteration -------------------

using Bits = std::vector<char>;

/// Solves X(i) = f(i, X(next(i))) by sweeping backwards until nothing changes,
/// starting from `seed` (all-false for least, all-true for greatest).
template <class Step>
Bits fixpoint(const LassoWord& sigma, bool seed, Step step) {
  const std::size_t n = sigma.positions();
  Bits x(n, seed ? 1 : 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = n; i-- > 0;) {
      const char v = step(i, x[sigma.next(i)]) ? 1 : 0;
      if (v != x[i]) {
        x[i] = v;
        changed = true;
      }
    }
  }
  return x;
}

}  // namespace

bool evalLTL(const Formula& phi, const LassoWord& sigma) {
  requireLogic(phi, Logic::LTL);
  const Closure cl(phi);
  const auto cols = atomColumns(cl, sigma);
  const std::size_t n = sigma.positions();
  std::vector<Bits> val(cl.size());
  for (std::size_t s = 0; s < cl.size(); ++s) {
    const Formula& f = cl[s];
    const auto [c0, c1] = cl.children(s);
    Bits& out = val[s];
    out.assign(n, 0);
    switch (f.op()) {
      case Op::Atom:
        for (std::size_t i = 0; i < n; ++i) out[i] = (sigma.at(i) >> cols[s] & 1) ? 1 : 0;
        break;
      case Op::True: out.assign(n, 1); break;
      case Op::False: break;
      case Op::Not:
        for (std::size_t i = 0; i < n; ++i) out[i] = !val[c0][i];
        break;
      case Op::And:
        for (std::size_t i = 0; i < n; ++i) out[i] = val[c0][i] && val[c1][i];
        break;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i) out[i] = val[c0][i] || val[c1][i];
        break;
      case Op::Implies:
        for (std::size_t i = 0; i < n; ++i) out[i] = !val[c0][i] || val[c1][i];
        break;
      case Op::Next:
        for (std::size_t i = 0; i < n; ++i) out[i] = val[c0][sigma.next(i)];
        break;
      case Op::Always:
        out = fixpoint(sigma, true, [&](std::size_t i, bool nx) { return val[c0][i] && nx; });
        break;
      case Op::Eventually:
        out = fixpoint(sigma, false, [&](std::size_t i, bool nx) { return val[c0][i] || nx; });
        break;
      case Op::Until:
        out = fixpoint(sigma, false,
                       [&](std::size_t i, bool nx) { return val[c1][i] || (val[c0][i] && nx); });
        break;
      case Op::Release:
        out = fixpoint(sigma, true,
                       [&](std::size_t i, bool nx) { return val[c1][i] && (val[c0][i] || nx); });
        break;
    }
  }
  return val[cl.rootIndex()][0] != 0;
}

// --- five-valued valuation by walking the lasso ---------------------------

namespace {

/// Component bits of one subformula at every canonical position.
using Components = std::array<Bits, 4>;

Components fromValues(const std::vector<TruthValue>& v) {
  Components c;
  for (int k = 0; k < 4; ++k) {
    c[k].resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[k][i] = v[i].component(k + 1) ? 1 : 0;
  }
  return c;
}

std::vector<TruthValue> toValues(const Components& c) {
  std::vector<TruthValue> v(c[0].size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = TruthValue::fromBits({c[0][i] != 0, c[1][i] != 0, c[2][i] != 0, c[3][i] != 0});
  }
  return v;
}

class Walker {
public:
  explicit Walker(const LassoWord& sigma) : sigma_(sigma), n_(sigma.positions()), u_(sigma.prefixLength()) {}

  /// inf over all j >= l of x(j).
  bool always(const Bits& x, std::size_t l) const { return all(x, l < u_ ? l : u_, n_); }
  /// sup over all j >= l of x(j).
  bool eventually(const Bits& x, std::size_t l) const { return any(x, l < u_ ? l : u_, n_); }
  /// sup_k inf_{j>=k}: holds on the whole loop.
  bool eventuallyAlways(const Bits& x) const { return all(x, u_, n_); }
  /// inf_k sup_{j>=k}: holds somewhere on the loop.
  bool alwaysEventually(const Bits& x) const { return any(x, u_, n_); }

  /// sup_{j>=0} min(b(j), inf_{0<=i<j} a(i)) on the suffix starting at l.
  bool until(const Bits& a, const Bits& b, std::size_t l) const {
    bool prefixA = true;
    std::size_t pos = l;
    for (std::size_t step = 0; step < horizon(l); ++step) {
      if (prefixA && b[pos]) return true;
      prefixA = prefixA && a[pos];
      if (!prefixA) return false;
      pos = sigma_.next(pos);
    }
    return false;
  }

  /// The sequence X(j) = max(b(j), sup_{0<=i<j} a(i)) on the suffix at l,
  /// reduced by inf (k=1), sup-inf (k=2), inf-sup (k=3) or sup (k=4).
  bool release(const Bits& a, const Bits& b, std::size_t l, int k) const {
    const std::size_t total = horizon(l) + sigma_.loopLength();
    const std::size_t tailStart = total - sigma_.loopLength();
    bool seenA = false;
    bool inf = true, sup = false, tailInf = true, tailSup = false;
    std::size_t pos = l;
    for (std::size_t step = 0; step < total; ++step) {
      const bool x = b[pos] || seenA;
      inf = inf && x;
      sup = sup || x;
      if (step >= tailStart) {
        tailInf = tailInf && x;
        tailSup = tailSup || x;
      }
      seenA = seenA || a[pos];
      pos = sigma_.next(pos);
    }
    switch (k) {
      case 1: return inf;
      case 2: return tailInf;
      case 3: return tailSup;
      default: return sup;
    }
  }

private:
  /// Steps after which every position reachable from l has been visited.
  std::size_t horizon(std::size_t l) const { return (n_ - l) + sigma_.loopLength(); }

  static bool all(const Bits& x, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (!x[i]) return false;
    }
    return true;
  }
  static bool any(const Bits& x, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (x[i]) return true;
    }
    return false;
  }

  const LassoWord& sigma_;
  std::size_t n_;
  std::size_t u_;
};

}  // namespace

std::vector<TruthValue> evalRLTLPositions(const Formula& phi, const LassoWord& sigma) {
  requireLogic(phi, Logic::RLTL);
  const Closure cl(phi);
  const auto cols = atomColumns(cl, sigma);
  const std::size_t n = sigma.positions();
  const Walker walk(sigma);
  std::vector<std::vector<TruthValue>> val(cl.size());
  for (std::size_t s = 0; s < cl.size(); ++s) {
    const Formula& f = cl[s];
    const auto [c0, c1] = cl.children(s);
    auto& out = val[s];
    out.assign(n, TruthValue::bottom());
    switch (f.op()) {
      case Op::Atom:
        for (std::size_t i = 0; i < n; ++i) {
          if (sigma.at(i) >> cols[s] & 1) out[i] = TruthValue::top();
        }
        break;
      case Op::True: out.assign(n, TruthValue::top()); break;
      case Op::False: break;
      case Op::Not:
        for (std::size_t i = 0; i < n; ++i) out[i] = negate(val[c0][i]);
        break;
      case Op::And:
        for (std::size_t i = 0; i < n; ++i) out[i] = meet(val[c0][i], val[c1][i]);
        break;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i) out[i] = join(val[c0][i], val[c1][i]);
        break;
      case Op::Implies:
        for (std::size_t i = 0; i < n; ++i) out[i] = implies(val[c0][i], val[c1][i]);
        break;
      case Op::Next:
        for (std::size_t i = 0; i < n; ++i) out[i] = val[c0][sigma.next(i)];
        break;
      case Op::Always: {
        const Components x = fromValues(val[c0]);
        Components r;
        for (auto& bits : r) bits.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
          r[0][i] = walk.always(x[0], i);
          r[1][i] = walk.eventuallyAlways(x[1]);
          r[2][i] = walk.alwaysEventually(x[2]);
          r[3][i] = walk.eventually(x[3], i);
        }
        out = toValues(r);
        break;
      }
      case Op::Eventually: {
        const Components x = fromValues(val[c0]);
        Components r;
        for (int k = 0; k < 4; ++k) {
          r[k].assign(n, 0);
          for (std::size_t i = 0; i < n; ++i) r[k][i] = walk.eventually(x[k], i);
        }
        out = toValues(r);
        break;
      }
      case Op::Until:
      case Op::Release: {
        const Components a = fromValues(val[c0]);
        const Components b = fromValues(val[c1]);
        Components r;
        for (int k = 0; k < 4; ++k) {
          r[k].assign(n, 0);
          for (std::size_t i = 0; i < n; ++i) {
            r[k][i] = f.op() == Op::Until ? walk.until(a[k], b[k], i) : walk.release(a[k], b[k], i, k + 1);
          }
        }
        out = toValues(r);
        break;
      }
    }
  }
  return val[cl.rootIndex()];
}

TruthValue evalRLTL(const Formula& phi, const LassoWord& sigma) { return evalRLTLPositions(phi, sigma)[0]; }

bool recoverLTLValue(const Formula& phi, const LassoWord& sigma) {
  return evalRLTL(phi, sigma).component(1);
}

// --- translation into four LTL formulas -----------------------------------

Formula translateToLTL(const Formula& phi, int j) {
  if (j < 1 || j > 4) throw std::out_of_range("component index must lie in 1..4, got " + std::to_string(j));
  requireLogic(phi, Logic::RLTL);
  const Closure cl(phi);
  std::vector<std::array<Formula, 4>> psi;
  psi.reserve(cl.size());
  for (std::size_t s = 0; s < cl.size(); ++s) {
    const Formula& f = cl[s];
    const auto [c0, c1] = cl.children(s);
    auto each = [](auto make) {
      return std::array<Formula, 4>{make(0), make(1), make(2), make(3)};
    };
    switch (f.op()) {
      case Op::Atom:
      case Op::True:
      case Op::False: {
        const Formula g = undot(f);
        psi.push_back({g, g, g, g});
        break;
      }
      case Op::Not: {
        const auto& x = psi[c0];
        const Formula g = Formula::negation(
            Formula::conjunction(Formula::conjunction(Formula::conjunction(x[0], x[1]), x[2]), x[3]));
        psi.push_back({g, g, g, g});
        break;
      }
      case Op::And:
        psi.push_back(each([&](int k) { return Formula::conjunction(psi[c0][k], psi[c1][k]); }));
        break;
      case Op::Or:
        psi.push_back(each([&](int k) { return Formula::disjunction(psi[c0][k], psi[c1][k]); }));
        break;
      case Op::Implies: {
        const auto& x = psi[c0];
        const auto& y = psi[c1];
        Formula drop = Formula::conjunction(x[0], Formula::negation(y[0]));
        for (int k = 1; k < 4; ++k) {
          drop = Formula::disjunction(drop, Formula::conjunction(x[k], Formula::negation(y[k])));
        }
        psi.push_back(each([&](int k) { return Formula::implication(drop, y[k]); }));
        break;
      }
      case Op::Next:
        psi.push_back(each([&](int k) { return Formula::next(psi[c0][k]); }));
        break;
      case Op::Eventually:
        psi.push_back(each([&](int k) { return Formula::eventually(psi[c0][k]); }));
        break;
      case Op::Always: {
        const auto& x = psi[c0];
        psi.push_back({Formula::always(x[0]), Formula::eventually(Formula::always(x[1])),
                       Formula::always(Formula::eventually(x[2])), Formula::eventually(x[3])});
        break;
      }
      case Op::Release:
      case Op::Until:
        throw UnsupportedOperator(std::string("no component translation for ") +
                                  (f.op() == Op::Release ? "release" : "until"));
    }
  }
  return psi[cl.rootIndex()][static_cast<std::size_t>(j - 1)];
}

}  // namespace rltl
