#include "rltl/rabin.hpp"

#include <algorithm>
#include <unordered_map>

#include "rltl/error.hpp"

namespace rltl {

RabinAutomaton::RabinAutomaton(std::vector<std::string> aps, std::size_t pairCount)
    : aps_(std::move(aps)), pairCount_(pairCount) {
  if (aps_.size() > kMaxDeterminizeAps) throw ResourceLimit("too many atomic propositions for a Rabin automaton");
}

StateId RabinAutomaton::addState(std::string annotation) {
  const auto id = static_cast<StateId>(annotations_.size());
  annotations_.push_back(std::move(annotation));
  delta_.resize(delta_.size() + letterCount(), id);
  e_.emplace_back();
  f_.emplace_back();
  return id;
}

namespace {

void insertSorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  const auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

}  // namespace

void RabinAutomaton::addToE(StateId s, std::uint32_t pair) {
  if (pair >= pairCount_) throw Error("Rabin pair out of range");
  insertSorted(e_.at(s), pair);
}

void RabinAutomaton::addToF(StateId s, std::uint32_t pair) {
  if (pair >= pairCount_) throw Error("Rabin pair out of range");
  insertSorted(f_.at(s), pair);
}

bool RabinAutomaton::acceptingSet(const std::vector<StateId>& infinite) const {
  std::vector<char> bad(pairCount_, 0), good(pairCount_, 0);
  for (StateId s : infinite) {
    for (std::uint32_t i : e_.at(s)) bad[i] = 1;
    for (std::uint32_t i : f_.at(s)) good[i] = 1;
  }
  for (std::size_t i = 0; i < pairCount_; ++i) {
    if (good[i] && !bad[i]) return true;
  }
  return false;
}

bool RabinAutomaton::acceptsLasso(const LassoWord& word) const {
  std::vector<Letter> bits;
  for (const std::string& atom : word.alphabet()) {
    const auto it = std::lower_bound(aps_.begin(), aps_.end(), atom);
    if (it == aps_.end() || *it != atom) throw AlphabetMismatch("atom '" + atom + "' is not in the AP list");
    bits.push_back(Letter{1} << (it - aps_.begin()));
  }
  auto translate = [&](Letter a) {
    Letter out = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (a >> i & 1) out |= bits[i];
    }
    return out;
  };

  StateId s = initial_;
  for (Letter a : word.prefix()) s = successor(s, translate(a));
  std::unordered_map<StateId, std::size_t> firstSeen;
  std::vector<std::vector<StateId>> rounds;
  while (!firstSeen.count(s)) {
    firstSeen.emplace(s, rounds.size());
    std::vector<StateId> visited;
    for (Letter a : word.loop()) {
      visited.push_back(s);
      s = successor(s, translate(a));
    }
    rounds.push_back(std::move(visited));
  }
  std::vector<StateId> infinite;
  for (std::size_t r = firstSeen.at(s); r < rounds.size(); ++r) {
    infinite.insert(infinite.end(), rounds[r].begin(), rounds[r].end());
  }
  return acceptingSet(infinite);
}

}  // namespace rltl
