#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "rltl/construction.hpp"
#include "rltl/error.hpp"
#include "rltl/semantics.hpp"

using namespace rltl;

namespace {

const std::vector<std::string> kPQ{"p", "q"};

Formula r(const char* s) { return parse(s, Logic::RLTL); }
Formula l(const char* s) { return parse(s, Logic::LTL); }
LassoWord w(const char* s) { return LassoWord::parse(s, kPQ); }
TruthValue tv(const char* s) { return *TruthValue::parse(s); }

std::size_t sizeBound(const Formula& f) {
  return static_cast<std::size_t>(std::pow(5.0, static_cast<double>(Closure(f).size()))) + 4;
}

}  // namespace

TEST_CASE("guards and conjunction") {
  const Guard pNotQ{0b11, 0b01};
  CHECK(pNotQ.matches(0b01));
  CHECK_FALSE(pNotQ.matches(0b11));
  CHECK(Guard{}.matches(0b10));
  CHECK(conjoin(pNotQ, Guard{0b01, 0b01}) == Guard{0b11, 0b01});
  CHECK_FALSE(conjoin(pNotQ, Guard{0b01, 0b00}));
}

TEST_CASE("emptiness on tiny automata") {
  Gba none(kPQ);
  none.setInitial(none.addState());
  CHECK(isEmpty(none).empty);

  Gba loop(kPQ);
  const StateId s = loop.addState();
  loop.addEdge(s, Guard{0b11, 0b10}, s);
  loop.addToSet(s, loop.addAcceptanceSet());
  loop.setInitial(s);
  const auto res = isEmpty(loop);
  REQUIRE_FALSE(res.empty);
  CHECK(res.witness->str() == "; {q}");
  CHECK(res.runCycle == std::vector<StateId>{s});
}

TEST_CASE("A for always p") {
  const Formula phi = r("G p");
  const Gba a = buildAutomaton(phi);
  CHECK(a.stateCount() < 29);
  CHECK(a.acceptanceSetCount() <= 8);
  const Gba top = restrictInitial(a, tv("1111"));
  CHECK(memberLasso(top, w("; {p}")));
  CHECK_FALSE(memberLasso(top, w("{} ; {p}")));
  CHECK(memberLasso(restrictInitial(a, tv("0011")), w("; {} {p}")));

  const auto witness = isEmpty(restrictInitial(a, tv("0111")));
  REQUIRE_FALSE(witness.empty);
  CHECK(evalRLTL(phi, *witness.witness) == tv("0111"));

  const Gba persistent = unionOverValues(a, {tv("1111"), tv("0111")});
  const auto values = TruthValue::all();
  const Gba everything = unionOverValues(a, {values.begin(), values.end()});
  const Gba nothing = unionOverValues(a, {});
  CHECK(persistent.stateCount() == a.stateCount() + 1);
  testing::Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const LassoWord x = testing::randomLasso(rng, {"p"}, 4, 4);
    CHECK(memberLasso(persistent, x) == evalLTL(l("F G p"), x));
    CHECK(memberLasso(everything, x));
    CHECK_FALSE(memberLasso(nothing, x));
  }
}

TEST_CASE("atoms are two-valued") {
  const Gba a = buildAutomaton(r("p"));
  CHECK(a.acceptanceSetCount() == 0);
  CHECK(isEmpty(restrictInitial(a, tv("0111"))).empty);
  CHECK(memberLasso(restrictInitial(a, tv("1111")), LassoWord::parse("{p} ; {}", std::vector<std::string>{"p"})));
  CHECK_FALSE(memberLasso(restrictInitial(a, tv("1111")), LassoWord::parse("{} ; {p}")));
  CHECK_THROWS_AS(restrictInitial(Gba(kPQ), tv("1111")), MissingDesignatedState);
}

TEST_CASE("products intersect languages") {
  const Gba a = restrictInitial(buildAutomaton(r("G p"), {kPQ}), tv("0111"));
  const Gba b = restrictInitial(buildAutomaton(r("G q"), {kPQ}), tv("1111"));
  const Gba ab = product(a, b);
  CHECK(memberLasso(ab, w("{q} {q} ; {p,q}")));
  // q is missing at position 0, so always q is only 0111 here.
  CHECK(evalRLTL(r("G q"), w("{} {p,q} ; {p,q}")) == tv("0111"));
  CHECK_FALSE(memberLasso(ab, w("{} {p,q} ; {p,q}")));
  CHECK_FALSE(memberLasso(ab, w("; {p,q}")));
  CHECK(ab.acceptanceSetCount() == a.acceptanceSetCount() + b.acceptanceSetCount());
  CHECK_THROWS_AS(product(a, universalAutomaton({"p"})), AlphabetMismatch);
  Gba dead(kPQ);
  dead.setInitial(dead.addState());
  CHECK(isEmpty(product(a, dead)).empty);
  testing::Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const LassoWord x = testing::randomLasso(rng, kPQ, 3, 3);
    CHECK(memberLasso(product(a, universalAutomaton(kPQ)), x) == memberLasso(a, x));
  }
}

TEST_CASE("degeneralization and trimming preserve the language") {
  const Gba a = restrictInitial(buildAutomaton(r("G p"), {kPQ}), tv("0111"));
  const Gba d = degeneralize(a);
  CHECK(d.acceptanceSetCount() == 1);
  const Gba t = trim(d);
  CHECK(t.stateCount() <= d.stateCount());
  testing::Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const LassoWord x = testing::randomLasso(rng, kPQ, 5, 5);
    const bool in = memberLasso(a, x);
    CHECK(memberLasso(d, x) == in);
    CHECK(memberLasso(t, x) == in);
  }
  const Gba u = degeneralize(universalAutomaton(kPQ));
  CHECK(u.acceptanceSetCount() == 1);
  CHECK(u.inSet(*u.initial(), 0));
}

TEST_CASE("exactly one value state accepts each word") {
  testing::Rng rng(12);
  testing::FormulaShape shape;
  shape.full = true;
  for (int i = 0; i < 120; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    const Compilation c = compile(f, {kPQ});
    CHECK(c.automaton.stateCount() <= sizeBound(f));
    CHECK(c.automaton.acceptanceSetCount() <= 4 * c.closure.size());
    for (int j = 0; j < 4; ++j) {
      const LassoWord x = testing::randomLasso(rng, kPQ, 4, 4);
      const TruthValue expected = evalRLTL(f, x);
      for (TruthValue b : TruthValue::all()) {
        INFO(f.str(), " on ", x.str(), " from q", b.str());
        CHECK(memberLasso(restrictInitial(c.automaton, b), x) == (b == expected));
      }
    }
  }
}

TEST_CASE("witness runs follow the expansion") {
  testing::Rng rng(13);
  testing::FormulaShape shape;
  shape.full = true;
  for (int i = 0; i < 60; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    const Compilation c = compile(f, {kPQ});
    for (TruthValue b : TruthValue::all()) {
      const auto res = isEmpty(restrictInitial(c.automaton, b));
      if (res.empty) continue;
      const LassoWord& x = *res.witness;
      CHECK(evalRLTL(f, x) == b);
      std::vector<StateId> run = res.runPrefix;
      run.insert(run.end(), res.runCycle.begin(), res.runCycle.end());
      run.push_back(res.runCycle.front());
      for (std::size_t pos = 0; pos + 1 < run.size(); ++pos) {
        const auto& mu = c.expansion[run[pos + 1]];
        const LassoWord suffix = x.suffix(pos);
        for (std::size_t k = 0; k < c.closure.size(); ++k) {
          CHECK(mu[k] == evalRLTL(c.closure[k], suffix));
        }
      }
    }
  }
}
