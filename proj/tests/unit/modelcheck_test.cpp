#include "doctest.h"
#include "generators.hpp"
#include "systems.hpp"
#include "rltl/construction.hpp"
#include "rltl/error.hpp"
#include "rltl/hoa.hpp"
#include "rltl/modelcheck.hpp"
#include "rltl/semantics.hpp"

using namespace rltl;

namespace {

const std::vector<std::string> kP{"p"};
const std::vector<std::string> kPQ{"p", "q"};

Formula r(const char* s) { return parse(s, Logic::RLTL); }
TruthValue tv(const char* s) { return *TruthValue::parse(s); }
Gba lasso(const char* s, const std::vector<std::string>& aps = kP) {
  return lassoAutomaton(LassoWord::parse(s, aps), aps);
}

}  // namespace

TEST_CASE("hoa output names the designated states") {
  const Gba a = buildAutomaton(r("G p"));
  const std::string text = writeHoa(a, "G p");
  CHECK(text.rfind("HOA: v1\n", 0) == 0);
  CHECK(text.find("rltl-start: 0 0000 1 0001 2 0011 3 0111 4 1111") != std::string::npos);
  CHECK(text.find("AP: 1 \"p\"") != std::string::npos);
  CHECK(text.find("--END--") != std::string::npos);
}

TEST_CASE("hoa round trip preserves languages") {
  testing::Rng rng(11);
  testing::FormulaShape shape;
  shape.maxTemporal = 2;
  shape.full = true;
  for (int n = 0; n < 30; ++n) {
    const Formula phi = testing::randomFormula(rng, shape);
    const Gba a = buildAutomaton(phi, {.aps = kPQ});
    const Gba back = readHoa(writeHoa(a));
    REQUIRE(back.stateCount() == a.stateCount());
    REQUIRE(back.acceptanceSetCount() == a.acceptanceSetCount());
    CHECK(writeHoa(back) == writeHoa(a));
    for (int k = 0; k < 5; ++k) {
      const LassoWord word = testing::randomLasso(rng, kPQ, 3, 3);
      const TruthValue b = evalRLTL(phi, word);
      CHECK(memberLasso(restrictInitial(back, b), word));
    }
  }
}

TEST_CASE("hoa reader handles general labels and aliases") {
  const Gba a = readHoa(R"(HOA: v1
States: 2
Start: 0
AP: 2 "q" "p"
Alias: @both 0 & 1
Acceptance: 1 Inf(0)
--BODY--
State: 0
[@both] 1
[!(0 | 1)] 0
State: 1 {0}
[t] 1
--END--
)");
  REQUIRE(a.aps() == kPQ);
  CHECK(a.edges(0).size() == 2);
  CHECK(memberLasso(a, LassoWord::parse("{} {p,q} ; {}", kPQ)));
  CHECK_FALSE(memberLasso(a, LassoWord::parse("{p} {p,q} ; {}", kPQ)));
  CHECK_FALSE(memberLasso(a, LassoWord::parse("; {}", kPQ)));
}

TEST_CASE("hoa reader rejects unsupported input") {
  CHECK_THROWS_AS(readHoa("HOA: v2"), ParseError);
  CHECK_THROWS_AS(readHoa("HOA: v1 States: 1 Acceptance: 1 Fin(0) --BODY-- --END--"), ParseError);
  CHECK_THROWS_AS(readHoa("HOA: v1 States: 1 AP: 1 \"p\" Acceptance: 0 t --BODY-- State: 0 [0] 0 {0} --END--"),
                  ParseError);
  CHECK_THROWS_AS(readHoa("HOA: v1 States: 1 AP: 1 \"p\" Acceptance: 0 t --BODY-- State: 0 [3] 0 --END--"),
                  ParseError);
  try {
    readHoa("HOA: v1\nStates: 1\nAcceptance: 0 t\n--BODY--\nState: 0\n[t] 4\n--END--\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 56);
  }
}

TEST_CASE("exact and at-least model checking on one lasso") {
  const Gba sys = lasso("{} {p} ; {p}");
  CHECK(mcExact(sys, r("G p"), tv("0111")).verdict);
  const ModelCheckResult no = mcExact(sys, r("G p"), tv("1111"));
  CHECK_FALSE(no.verdict);
  REQUIRE(no.counterexample);
  CHECK(memberLasso(sys, *no.counterexample));
  CHECK(evalRLTL(r("G p"), *no.counterexample) == tv("0111"));

  CHECK(mcAtLeast(sys, r("G p"), tv("0011")).verdict);
  CHECK(mcAtLeast(sys, r("G p"), tv("0000")).verdict);
  CHECK_FALSE(mcAtLeast(sys, r("G p"), tv("1111")).verdict);
}

TEST_CASE("empty systems satisfy everything vacuously") {
  Gba none(kP);
  none.setInitial(none.addState());
  for (TruthValue b : TruthValue::all()) {
    CHECK(mcExact(none, r("G p"), b).verdict);
  }
  const BestValue best = bestValue(none, r("F p"));
  CHECK(best.vacuous);
  CHECK(best.value == TruthValue::top());
}

TEST_CASE("best value") {
  CHECK(bestValue(lasso("; {p}"), r("G p")).value == tv("1111"));
  CHECK(bestValue(lasso("{} {p} ; {p}"), r("G p")).value == tv("0111"));
  const Gba both = testing::unionOf(lasso("; {p}"), lasso("{p} ; {}"));
  const BestValue best = bestValue(both, r("G p"));
  CHECK_FALSE(best.vacuous);
  CHECK(best.value == tv("0001"));
}

TEST_CASE("model checking needs the formula's atoms") {
  CHECK_THROWS_AS(mcExact(lasso("; {p}"), r("G q"), tv("1111")), AlphabetMismatch);
}

TEST_CASE("model checking agrees with evaluation on single lassos") {
  testing::Rng rng(5);
  testing::FormulaShape shape;
  shape.maxTemporal = 2;
  shape.full = true;
  for (int n = 0; n < 40; ++n) {
    const Formula phi = testing::randomFormula(rng, shape);
    const LassoWord word = testing::randomLasso(rng, kPQ, 3, 3);
    const Gba sys = lassoAutomaton(word, kPQ);
    const TruthValue v = evalRLTL(phi, word);
    CHECK(bestValue(sys, phi).value == v);
    for (TruthValue b : TruthValue::all()) {
      const ModelCheckResult exact = mcExact(sys, phi, b);
      CHECK(exact.verdict == (b == v));
      CHECK(mcAtLeast(sys, phi, b).verdict == (b <= v));
      if (!exact.verdict) {
        REQUIRE(exact.counterexample);
        CHECK(evalRLTL(phi, *exact.counterexample) == v);
      }
    }
  }
}
