#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "rltl/hoa.hpp"
#include "rltl/semantics.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rltl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(RLTL_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("eval") {
  CHECK(run({"eval", "--rltl", "G p", "--word", "{} ; {p}"}).out == "0111\n");
  CHECK(run({"eval", "--ltl", "G p", "--word", "; {p}"}).out == "1\n");
  CHECK(run({"eval", "--rltl", "F p", "--word", "{p} ; {}"}).out == "1111\n");
  CHECK(run({"eval", "--rltl", "G p", "--word", "; {}"}).out == "0000\n");
  const Run json = run({"eval", "--rltl", "G p", "--word", "{} ; {p}", "--json"});
  CHECK(nlohmann::json::parse(json.out).at("value") == "0111");
}

TEST_CASE("translate") {
  CHECK(run({"translate", "--formula", "G p", "--component", "2"}).out == "F G p\n");
  CHECK(run({"translate", "--formula", "p", "--component", "3"}).out == "p\n");
  CHECK(run({"translate", "--formula", "F p", "--component", "1"}).out == "F p\n");
  CHECK(run({"translate", "--formula", "G p", "--component", "5"}).code == rltl::cli::kError);
}

TEST_CASE("compile writes HOA") {
  const auto path = std::filesystem::temp_directory_path() / "rltl_cli_test.hoa";
  const Run r = run({"compile", "--formula", "G p", "-o", path.string()});
  REQUIRE(r.code == rltl::cli::kOk);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const rltl::Gba a = rltl::readHoa(text.str());
  CHECK(a.stateCount() <= 29);
  CHECK(a.hasValueStates());
  std::filesystem::remove(path);
}

TEST_CASE("mc exit codes") {
  const std::string system = sample("late_p.hoa");
  CHECK(run({"mc", "--system", system, "--formula", "G p", "--exact", "0111"}).code == rltl::cli::kOk);
  CHECK(run({"mc", "--system", system, "--formula", "G p", "--at-least", "0011"}).code == rltl::cli::kOk);
  const Run fails = run({"mc", "--system", system, "--formula", "G p", "--exact", "1111"});
  CHECK(fails.code == rltl::cli::kNegative);
  CHECK(fails.out.find("{p}") != std::string::npos);
  const Run json = run({"mc", "--system", system, "--formula", "G p", "--at-least", "1111", "--json"});
  CHECK(json.code == rltl::cli::kNegative);
  CHECK(nlohmann::json::parse(json.out).at("verdict") == false);
  CHECK(run({"mc", "--system", sample("missing.hoa"), "--formula", "G p", "--exact", "0111"}).code ==
        rltl::cli::kError);
}

TEST_CASE("best") {
  CHECK(run({"best", "--system", sample("late_p.hoa"), "--formula", "G p"}).out == "0111\n");
}

TEST_CASE("synth") {
  const Run r = run({"synth", "--game", sample("choice.game"), "--formula", "G p", "--targets", "1111"});
  CHECK(r.code == rltl::cli::kOk);
  CHECK(r.out.find("winner: player0") != std::string::npos);
  CHECK(r.out.find("v0 -> a") != std::string::npos);
  const Run lose = run({"synth", "--game", sample("choice.game"), "--formula", "G !p", "--at-least", "1111"});
  CHECK(lose.code == rltl::cli::kNegative);
  const Run json = run({"synth", "--game", sample("choice.game"), "--formula", "G p", "--at-least", "0111", "--json"});
  CHECK(nlohmann::json::parse(json.out).at("winner") == "player0");
}

TEST_CASE("errors") {
  const Run bad = run({"eval", "--rltl", "G (", "--word", "; {}"});
  CHECK(bad.code == rltl::cli::kError);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(run({}).code == rltl::cli::kError);
  CHECK(run({"bogus"}).code == rltl::cli::kError);
}

TEST_CASE("selftest") {
  CHECK(run({"selftest", "--count", "5"}).code == rltl::cli::kOk);
}

TEST_CASE("mc on a single-lasso system matches eval") {
  const std::string system = sample("late_p.hoa");
  for (const char* formula : {"G p", "F p", "G F p", "!p", "F G !p"}) {
    const std::string value = run({"eval", "--rltl", formula, "--word", "{} {p} ; {p}"}).out.substr(0, 4);
    for (const char* b : {"0000", "0001", "0011", "0111", "1111"}) {
      CAPTURE(formula);
      CAPTURE(b);
      const int code = run({"mc", "--system", system, "--formula", formula, "--at-least", b}).code;
      CHECK((code == rltl::cli::kOk) == (std::string(b) <= value));
    }
  }
}

TEST_CASE("best is a lower bound on sampled behaviors") {
  std::ifstream in(sample("flaky_sensor.hoa"));
  std::stringstream text;
  text << in.rdbuf();
  const rltl::Gba system = rltl::readHoa(text.str());
  for (const char* formula : {"G ok", "G (alarm -> F ok)", "F G ok"}) {
    const Run r = run({"best", "--system", sample("flaky_sensor.hoa"), "--formula", formula});
    REQUIRE(r.code == rltl::cli::kOk);
    const rltl::TruthValue best = *rltl::TruthValue::parse(r.out.substr(0, 4));
    const rltl::Formula phi = rltl::parse(formula, rltl::Logic::RLTL);
    int sampled = 0;
    bool attained = false;
    // Every lasso over {alarm, ok} with |u| <= 2 and 1 <= |v| <= 2.
    const std::vector<std::vector<rltl::Letter>> words{{}, {0}, {1}, {2}, {3}, {0, 0}, {0, 1}, {0, 2}, {0, 3},
                                                      {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2},
                                                      {2, 3}, {3, 0}, {3, 1}, {3, 2}, {3, 3}};
    for (const auto& u : words) {
      for (const auto& v : words) {
        if (v.empty()) continue;
        const rltl::LassoWord x(system.aps(), u, v);
        if (!rltl::memberLasso(system, x)) continue;
        ++sampled;
        const rltl::TruthValue value = rltl::evalRLTL(phi, x);
        CHECK(value >= best);
        attained = attained || value == best;
      }
    }
    CHECK(sampled > 0);
    CHECK(attained);
  }
}
