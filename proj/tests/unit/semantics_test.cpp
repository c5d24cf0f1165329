#include "doctest.h"
#include "generators.hpp"
#include "rltl/error.hpp"
#include "rltl/semantics.hpp"

using namespace rltl;

namespace {

const std::vector<std::string> kPQ{"p", "q"};

Formula r(const char* s) { return parse(s, Logic::RLTL); }
Formula l(const char* s) { return parse(s, Logic::LTL); }
LassoWord w(const char* s) { return LassoWord::parse(s, kPQ); }
TruthValue tv(const char* s) { return *TruthValue::parse(s); }

}  // namespace

TEST_CASE("lasso words parse, print and shift") {
  const LassoWord x = LassoWord::parse("{p,q} {} ; {p}");
  CHECK(x.alphabet() == kPQ);
  CHECK(x.prefixLength() == 2);
  CHECK(x.loopLength() == 1);
  CHECK(x.str() == "{p,q} {} ; {p}");
  CHECK(LassoWord::parse(";{p}").str() == "; {p}");
  CHECK(x.suffix(5) == LassoWord::parse("; {p}", kPQ));
  CHECK(w("{p} ; {q} {}").suffix(4).str() == "; {} {q}");
  CHECK_THROWS_AS(LassoWord::parse("{p} {q}"), ParseError);
  CHECK_THROWS_AS(LassoWord::parse("{p} ;"), ParseError);
  CHECK_THROWS_AS(LassoWord::parse("; {r}", kPQ), AlphabetMismatch);
}

TEST_CASE("classical valuation") {
  CHECK(evalLTL(l("G p"), w("; {p}")));
  CHECK_FALSE(evalLTL(l("G p"), w("{} ; {p}")));
  CHECK(evalLTL(l("p U q"), w("{p} {p} ; {q}")));
  CHECK_FALSE(evalLTL(l("p U q"), w("{p} {} ; {q}")));
  CHECK(evalLTL(l("q R p"), w("{p} {p,q} ; {}")));
  CHECK(evalLTL(l("X X q"), w("{} {} ; {q}")));
  CHECK_THROWS_AS(evalLTL(l("G r"), w("; {p}")), AlphabetMismatch);
  CHECK_THROWS_AS(evalLTL(r("G p"), w("; {p}")), Error);
}

TEST_CASE("robust valuation of always on the canonical words") {
  CHECK(evalRLTL(r("G p"), w("; {p}")) == tv("1111"));
  CHECK(evalRLTL(r("G p"), w("{} {p} ; {p}")) == tv("0111"));
  CHECK(evalRLTL(r("G p"), w("; {} {p}")) == tv("0011"));
  CHECK(evalRLTL(r("G p"), w("{p} ; {}")) == tv("0001"));
  CHECK(evalRLTL(r("G p"), w("; {}")) == tv("0000"));
  CHECK(evalRLTL(r("G F p"), w("{p} ; {}")) == tv("0001"));
  CHECK(evalRLTL(r("G p -> G q"), w("{} ; {p,q}")) == tv("1111"));
  CHECK(evalRLTL(r("G p -> G q"), w("; {p} {p,q}")) == tv("0011"));
}

TEST_CASE("release matches its component formulas on a small word") {
  const LassoWord x = w("; {q} {}");
  CHECK(evalRLTL(r("p R q"), x) == tv("0011"));
  CHECK_FALSE(evalLTL(l("p R q"), x));
  CHECK_FALSE(evalLTL(l("F G q | F p"), x));
  CHECK(evalLTL(l("G F q | F p"), x));
  CHECK(evalLTL(l("F q | F p"), x));
}

TEST_CASE("translation rules") {
  CHECK(translateToLTL(r("G p"), 2) == l("F G p"));
  for (int j = 1; j <= 4; ++j) CHECK(translateToLTL(r("p"), j) == l("p"));
  CHECK(translateToLTL(r("!G p"), 1) == l("!(G p & F G p & G F p & F p)"));
  CHECK(translateToLTL(r("F p"), 1) == l("F p"));
  CHECK(translateToLTL(r("X G p"), 3) == l("X G F p"));
  CHECK_THROWS_AS(translateToLTL(r("p U q"), 1), UnsupportedOperator);
  CHECK_THROWS_AS(translateToLTL(r("G (p R q)"), 1), UnsupportedOperator);
  CHECK_THROWS_AS(translateToLTL(r("p"), 0), std::out_of_range);
}

TEST_CASE("first component recovers the classical value") {
  CHECK_FALSE(recoverLTLValue(r("G p"), w("{} ; {p}")));
  CHECK(recoverLTLValue(r("F p"), w("{} ; {p}")));
  CHECK(recoverLTLValue(r("G p -> G q"), w("; {p,q}")));

  testing::Rng rng(3);
  testing::FormulaShape shape;
  for (int i = 0; i < 300; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    const LassoWord x = testing::randomLasso(rng, kPQ, 4, 4);
    if (!testing::containsOp(f, Op::Implies)) CHECK(recoverLTLValue(f, x) == evalLTL(undot(f), x));
    for (int j = 1; j <= 4; ++j) CHECK(evalRLTL(f, x).component(j) == evalLTL(translateToLTL(f, j), x));
  }
}

TEST_CASE("first component of an implication is not the classical implication") {
  // 0111 -> 0011 is 0011, so the first component is 0 while the undotted
  // formula holds vacuously.
  const LassoWord x = w("{} ; {p} {p,q}");
  CHECK(evalRLTL(r("G p"), x) == tv("0111"));
  CHECK(evalRLTL(r("G q"), x) == tv("0011"));
  CHECK_FALSE(recoverLTLValue(r("G p -> G q"), x));
  CHECK(evalLTL(l("G p -> G q"), x));
}

TEST_CASE("release with counting separates words only once p occurs") {
  // Without any p the guarantee part keeps the plain release value.
  CHECK(evalRLTL(r("(p R q) & (!p U q)"), w("{q} ; {}")) == tv("0001"));
  CHECK(evalRLTL(r("(p R q) & (!p U q)"), w("{q} {p} ; {}")) == tv("0111"));
  CHECK(evalRLTL(r("(p R q) & (!p U q)"), w("{p} ; {q}")) == tv("0000"));
}

TEST_CASE("semantic fixtures") {
  testing::Rng rng(5);
  testing::FormulaShape shape;
  shape.full = true;
  shape.maxTemporal = 2;
  for (int i = 0; i < 400; ++i) {
    const LassoWord x = testing::randomLasso(rng, kPQ, 4, 4);

    const TruthValue fair = evalRLTL(r("G (p -> F q)"), x);
    CHECK(fair.component(1) == evalLTL(l("G (p -> F q)"), x));
    CHECK(fair.component(2) == evalLTL(l("G F p -> G F q"), x));
    CHECK(fair.component(3) == evalLTL(l("F G p -> G F q"), x));
    CHECK(fair.component(4) == evalLTL(l("G p -> F q"), x));

    const TruthValue gr1 = evalRLTL(r("G F p"), x);
    CHECK((gr1 == tv("1111") || gr1 == tv("0001") || gr1 == tv("0000")));

    const TruthValue counting = evalRLTL(r("(p R q) & (!p U q)"), x);
    CHECK(counting.component(1) == evalLTL(l("p R q"), x));
    if (evalLTL(l("F p"), x)) {
      for (int k = 2; k <= 4; ++k) CHECK(counting.component(k) == evalLTL(l("!p U q"), x));
    }

    const TruthValue rel = evalRLTL(r("p R q"), x);
    CHECK(rel.component(1) == evalLTL(l("p R q"), x));
    CHECK(rel.component(2) == evalLTL(l("F G q | F p"), x));
    CHECK(rel.component(3) == evalLTL(l("G F q | F p"), x));
    CHECK(rel.component(4) == evalLTL(l("F q | F p"), x));

    const Formula psi = testing::randomFormula(rng, shape);
    CHECK(evalRLTL(Formula::release(Formula::constant(false), psi), x) == evalRLTL(Formula::always(psi), x));
    CHECK(evalRLTL(Formula::until(Formula::constant(true), psi), x) == evalRLTL(Formula::eventually(psi), x));
  }
}

TEST_CASE("position table agrees with suffixes") {
  testing::Rng rng(9);
  testing::FormulaShape shape;
  shape.full = true;
  for (int i = 0; i < 200; ++i) {
    const Formula f = testing::randomFormula(rng, shape);
    const LassoWord x = testing::randomLasso(rng, kPQ, 3, 3);
    const auto table = evalRLTLPositions(f, x);
    for (std::size_t pos = 0; pos < x.positions(); ++pos) CHECK(table[pos] == evalRLTL(f, x.suffix(pos)));
  }
}
