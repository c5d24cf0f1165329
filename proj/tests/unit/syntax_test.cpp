#include <random>

#include "doctest.h"
#include "generators.hpp"
#include "rltl/error.hpp"
#include "rltl/formula.hpp"

using namespace rltl;

namespace {

Formula r(const char* s) { return parse(s, Logic::RLTL); }
Formula a(const char* name) { return Formula::atom(name); }

}  // namespace

TEST_CASE("parser honours precedence and associativity") {
  CHECK(r("G p -> G q") == Formula::implication(Formula::always(a("p")), Formula::always(a("q"))));
  CHECK(r("p U q") == Formula::until(a("p"), a("q")));
  CHECK(r("G (p -> F q)") == Formula::always(Formula::implication(a("p"), Formula::eventually(a("q")))));
  CHECK(r("p -> q -> p") == Formula::implication(a("p"), Formula::implication(a("q"), a("p"))));
  CHECK(r("p U q R p") == Formula::until(a("p"), Formula::release(a("q"), a("p"))));
  CHECK(r("p | q & p") == Formula::disjunction(a("p"), Formula::conjunction(a("q"), a("p"))));
  CHECK(r("!p U q") == Formula::until(Formula::negation(a("p")), a("q")));
  CHECK(r("X G p & true") ==
        Formula::conjunction(Formula::next(Formula::always(a("p"))), Formula::constant(true)));
  CHECK(parse("G p", Logic::LTL).logic() == Logic::LTL);
}

TEST_CASE("parse errors carry a position") {
  auto positionOf = [](const char* text) -> std::size_t {
    try {
      parse(text, Logic::RLTL);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  CHECK(positionOf("p & ") == 4);
  CHECK(positionOf("(p | q") == 6);
  CHECK(positionOf("p $ q") == 2);
  CHECK(positionOf("p - q") == 2);
  CHECK(positionOf("p q") == 2);
  CHECK(positionOf("") == 0);
}

TEST_CASE("printing round-trips through the parser") {
  CHECK(r("G p -> G q").str() == "G p -> G q");
  CHECK(r("(p -> q) -> p").str() == "(p -> q) -> p");
  CHECK(r("(p U q) U p").str() == "(p U q) U p");
  CHECK(r("!(p & q)").str() == "!(p & q)");
  CHECK(r("F G p").str() == "F G p");

  testing::Rng rng(7);
  testing::FormulaShape shape;
  shape.full = true;
  shape.maxDepth = 6;
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    CHECK(r(f.str().c_str()) == f);
  }
}

TEST_CASE("closure lists distinct subformulas children first") {
  const Closure cl(r("G (p -> F q)"));
  REQUIRE(cl.size() == 5);
  CHECK(cl[cl.rootIndex()] == r("G (p -> F q)"));
  for (const char* s : {"p -> F q", "p", "F q", "q"}) CHECK(cl.indexOf(r(s)));
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t c = 0; c < cl[i].arity(); ++c) CHECK(cl.children(i)[c] < i);
  }
  CHECK(Closure(r("p")).size() == 1);
  CHECK(Closure(r("G p")).size() == 2);
  CHECK(Closure(r("p & p | p")).size() == 3);

  testing::Rng rng(11);
  testing::FormulaShape shape;
  shape.full = true;
  for (int i = 0; i < 200; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    const Closure cl1(f);
    CHECK(cl1.size() <= f.size());
    const Closure cl2(cl1[cl1.rootIndex()]);
    CHECK(cl2.items() == cl1.items());
  }
}

TEST_CASE("dotting switches only the logic tag") {
  const Formula ltl = parse("G p -> G q", Logic::LTL);
  const Formula rl = dot(ltl);
  CHECK(rl.logic() == Logic::RLTL);
  CHECK(rl.sameTree(ltl));
  CHECK(rl == r("G p -> G q"));
  CHECK(undot(rl) == ltl);
  CHECK(atoms(r("q U (p & X q)")) == std::vector<std::string>{"p", "q"});
}
