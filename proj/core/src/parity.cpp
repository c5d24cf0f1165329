#include "rltl/parity.hpp"

#include <algorithm>
#include <array>

#include "rltl/error.hpp"

namespace rltl {

std::uint32_t ParityGame::addVertex(Player p, std::uint32_t prio) {
  owner.push_back(p);
  priority.push_back(prio);
  successors.emplace_back();
  return static_cast<std::uint32_t>(owner.size() - 1);
}

namespace {

using Set = std::vector<std::uint32_t>;

class Zielonka {
public:
  explicit Zielonka(const ParityGame& g) : g_(g), n_(g.size()), move_(n_, kNoMove) {
    preds_.resize(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (g.successors[v].empty()) throw Error("parity game vertex without successor");
      for (std::uint32_t w : g.successors[v]) preds_.at(w).push_back(v);
    }
  }

  ParitySolution run() {
    Set all(n_);
    for (std::uint32_t v = 0; v < n_; ++v) all[v] = v;
    std::vector<char> mask(n_, 1);
    const auto won = solve(all, mask);
    ParitySolution out;
    out.winner.assign(n_, Player::Zero);
    for (std::uint32_t v : won[1]) out.winner[v] = Player::One;
    out.move.assign(n_, kNoMove);
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (g_.owner[v] == out.winner[v]) out.move[v] = move_[v];
    }
    return out;
  }

private:
  /// Attractor of `target` for `p` inside `mask`; records p's moves.
  Set attractor(const std::vector<char>& mask, const Set& target, Player p) {
    std::vector<char> in(n_, 0);
    std::vector<int> remaining(n_, -1);
    Set out = target;
    for (std::uint32_t v : target) in[v] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
      const std::uint32_t v = out[head];
      for (std::uint32_t u : preds_[v]) {
        if (!mask[u] || in[u]) continue;
        if (g_.owner[u] == p) {
          in[u] = 1;
          move_[u] = v;
          out.push_back(u);
          continue;
        }
        if (remaining[u] < 0) {
          remaining[u] = 0;
          for (std::uint32_t w : g_.successors[u]) remaining[u] += mask[w] ? 1 : 0;
        }
        if (--remaining[u] == 0) {
          in[u] = 1;
          out.push_back(u);
        }
      }
    }
    return out;
  }

  static Set minus(const Set& domain, const Set& removed, std::vector<char>& mask) {
    for (std::uint32_t v : removed) mask[v] = 0;
    Set out;
    for (std::uint32_t v : domain) {
      if (mask[v]) out.push_back(v);
    }
    for (std::uint32_t v : removed) mask[v] = 1;
    return out;
  }

  std::array<Set, 2> solve(const Set& domain, std::vector<char>& mask) {
    std::array<Set, 2> won;
    if (domain.empty()) return won;
    std::uint32_t top = 0;
    for (std::uint32_t v : domain) top = std::max(top, g_.priority[v]);
    const Player i = top % 2 == 0 ? Player::Zero : Player::One;
    const auto ii = static_cast<std::size_t>(i);
    const auto oo = 1 - ii;

    Set u;
    for (std::uint32_t v : domain) {
      if (g_.priority[v] == top) u.push_back(v);
    }
    const Set a = attractor(mask, u, i);
    const Set rest = minus(domain, a, mask);
    auto sub = withMask(rest, mask, domain);

    if (sub[oo].empty()) {
      for (std::uint32_t v : u) {
        if (g_.owner[v] != i) continue;
        for (std::uint32_t w : g_.successors[v]) {
          if (mask[w]) {
            move_[v] = w;
            break;
          }
        }
      }
      won[ii] = domain;
      return won;
    }

    const Set b = attractor(mask, sub[oo], opponent(i));
    const Set rest2 = minus(domain, b, mask);
    auto sub2 = withMask(rest2, mask, domain);
    won[ii] = std::move(sub2[ii]);
    won[oo] = std::move(sub2[oo]);
    won[oo].insert(won[oo].end(), b.begin(), b.end());
    return won;
  }

  /// Solves the subgame on `sub`, a subset of `domain` (whose mask is set).
  std::array<Set, 2> withMask(const Set& sub, std::vector<char>& mask, const Set& domain) {
    for (std::uint32_t v : domain) mask[v] = 0;
    for (std::uint32_t v : sub) mask[v] = 1;
    auto out = solve(sub, mask);
    for (std::uint32_t v : domain) mask[v] = 1;
    return out;
  }

  const ParityGame& g_;
  std::uint32_t n_;
  std::vector<std::vector<std::uint32_t>> preds_;
  std::vector<std::uint32_t> move_;
};

}  // namespace

ParitySolution solveParity(const ParityGame& game) { return Zielonka(game).run(); }

}  // namespace rltl
