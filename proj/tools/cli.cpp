#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "rltl/construction.hpp"
#include "rltl/error.hpp"
#include "rltl/hoa.hpp"
#include "rltl/modelcheck.hpp"
#include "rltl/semantics.hpp"
#include "rltl/synthesis.hpp"

namespace rltl::cli {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TruthValue value(const std::string& text) {
  const auto b = TruthValue::parse(text);
  if (!b) throw Error("not a truth value: '" + text + "'");
  return *b;
}

std::vector<TruthValue> valueList(const std::string& text) {
  std::vector<TruthValue> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(value(item));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TruthValue> atLeast(TruthValue b) {
  std::vector<TruthValue> out;
  for (TruthValue c : TruthValue::all()) {
    if (b <= c) out.push_back(c);
  }
  return out;
}

std::vector<std::string> unionAtoms(const Formula& phi, const LassoWord& word) {
  std::vector<std::string> aps = atoms(phi);
  aps.insert(aps.end(), word.alphabet().begin(), word.alphabet().end());
  std::sort(aps.begin(), aps.end());
  aps.erase(std::unique(aps.begin(), aps.end()), aps.end());
  return aps;
}

json valuesJson(const std::vector<TruthValue>& values) {
  json out = json::array();
  for (TruthValue b : values) out.push_back(b.str());
  return out;
}

// --- selftest -----------------------------------------------------------------

Formula randomFormula(std::mt19937_64& rng, int depth, int& temporal) {
  static const std::vector<std::string> kAtoms{"p", "q"};
  const auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  if (depth == 0 || pick(4) == 0) return Formula::atom(kAtoms[pick(2)]);
  const std::size_t kind = pick(temporal > 0 ? 9 : 4);
  if (kind >= 4) --temporal;
  switch (kind) {
    case 0: return Formula::negation(randomFormula(rng, depth - 1, temporal));
    case 1: {
      Formula a = randomFormula(rng, depth - 1, temporal);
      return Formula::conjunction(std::move(a), randomFormula(rng, depth - 1, temporal));
    }
    case 2: {
      Formula a = randomFormula(rng, depth - 1, temporal);
      return Formula::disjunction(std::move(a), randomFormula(rng, depth - 1, temporal));
    }
    case 3: {
      Formula a = randomFormula(rng, depth - 1, temporal);
      return Formula::implication(std::move(a), randomFormula(rng, depth - 1, temporal));
    }
    case 4: return Formula::always(randomFormula(rng, depth - 1, temporal));
    case 5: return Formula::eventually(randomFormula(rng, depth - 1, temporal));
    case 6: return Formula::next(randomFormula(rng, depth - 1, temporal));
    case 7: {
      Formula a = randomFormula(rng, depth - 1, temporal);
      return Formula::release(std::move(a), randomFormula(rng, depth - 1, temporal));
    }
    default: {
      Formula a = randomFormula(rng, depth - 1, temporal);
      return Formula::until(std::move(a), randomFormula(rng, depth - 1, temporal));
    }
  }
}

LassoWord randomLasso(std::mt19937_64& rng) {
  std::vector<Letter> u(rng() % 4), v(1 + rng() % 4);
  for (Letter& a : u) a = rng() % 4;
  for (Letter& a : v) a = rng() % 4;
  return LassoWord({"p", "q"}, std::move(u), std::move(v));
}

struct Selftest {
  int checked = 0;
  std::vector<std::string> failures;
};

Selftest selftest(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> aps{"p", "q"};
  Selftest out;
  for (int n = 0; n < count; ++n) {
    int temporal = 2;
    const Formula phi = randomFormula(rng, 3, temporal).withLogic(Logic::RLTL);
    const Gba a = buildAutomaton(phi, {.aps = aps});
    for (int k = 0; k < 4; ++k) {
      const LassoWord w = randomLasso(rng);
      const TruthValue v = evalRLTL(phi, w);
      ++out.checked;
      int accepting = 0;
      bool right = false;
      for (TruthValue b : TruthValue::all()) {
        if (memberLasso(restrictInitial(a, b), w)) {
          ++accepting;
          right = b == v;
        }
      }
      if (accepting != 1 || !right) out.failures.push_back("automaton: " + phi.str() + " on " + w.str());
      const Gba sys = lassoAutomaton(w, aps);
      if (!mcExact(sys, phi, v).verdict) out.failures.push_back("mc: " + phi.str() + " on " + w.str());
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robust LTL toolkit: evaluation, translation, automata, model checking, synthesis"};
  app.name("rltl");
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "Machine-readable output");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a formula on a lasso word u ; v");
  std::string rltlText, ltlText, wordText;
  auto* rltlOpt = eval->add_option("--rltl", rltlText, "rLTL formula (5-valued)");
  auto* ltlOpt = eval->add_option("--ltl", ltlText, "LTL formula (Boolean)");
  rltlOpt->excludes(ltlOpt);
  eval->add_option("--word", wordText, "Lasso word, e.g. \"{p} {} ; {p,q}\"")->required();
  eval->add_flag("--json", asJson, "Machine-readable output");

  // translate
  auto* translate = app.add_subcommand("translate", "LTL formula for one component of an rLTL formula");
  std::string formulaText;
  int component = 1;
  translate->add_option("--formula", formulaText, "rLTL formula over G/F")->required();
  translate->add_option("--component", component, "Component 1..4")->check(CLI::Range(1, 4));
  translate->add_flag("--json", asJson, "Machine-readable output");

  // compile
  auto* compileCmd = app.add_subcommand("compile", "Build the automaton of an rLTL formula (HOA)");
  std::string outPath;
  std::vector<std::string> apList;
  compileCmd->add_option("--formula", formulaText, "rLTL formula")->required();
  compileCmd->add_option("--out,-o", outPath, "Write HOA here instead of stdout");
  compileCmd->add_option("--aps", apList, "AP list (defaults to the formula's atoms)")->delimiter(',');
  compileCmd->add_flag("--json", asJson, "Print statistics as JSON (HOA still goes to --out)");

  // mc
  auto* mc = app.add_subcommand("mc", "Model check a system automaton (HOA) against an rLTL formula");
  std::string systemPath, exactText, atLeastText;
  mc->add_option("--system", systemPath, "System automaton in HOA")->required();
  mc->add_option("--formula", formulaText, "rLTL formula")->required();
  auto* exactOpt = mc->add_option("--exact", exactText, "Every behavior has exactly this value");
  auto* atLeastOpt = mc->add_option("--at-least", atLeastText, "Every behavior has at least this value");
  exactOpt->excludes(atLeastOpt);
  mc->add_flag("--json", asJson, "Machine-readable output");

  // best
  auto* best = app.add_subcommand("best", "Largest value guaranteed by every behavior of a system");
  best->add_option("--system", systemPath, "System automaton in HOA")->required();
  best->add_option("--formula", formulaText, "rLTL formula")->required();
  best->add_flag("--json", asJson, "Machine-readable output");

  // synth
  auto* synth = app.add_subcommand("synth", "Solve an rLTL game and print a winning strategy");
  std::string gamePath, targetsText, synthAtLeast, vertexName;
  synth->add_option("--game", gamePath, "Game graph file")->required();
  synth->add_option("--formula", formulaText, "rLTL formula")->required();
  auto* targetsOpt = synth->add_option("--targets", targetsText, "Winning values for player 0, e.g. 0111,1111");
  auto* synthAtLeastOpt = synth->add_option("--at-least", synthAtLeast, "Shorthand for all values >= this one");
  targetsOpt->excludes(synthAtLeastOpt);
  synth->add_option("--vertex", vertexName, "Start vertex (defaults to the game's initial vertex)");
  synth->add_flag("--json", asJson, "Machine-readable output");

  // selftest (hidden)
  auto* self = app.add_subcommand("selftest", "");
  std::uint64_t seed = 20190128;
  int count = 100;
  self->add_option("--seed", seed);
  self->add_option("--count", count);
  self->add_flag("--json", asJson);
  self->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (eval->parsed()) {
      if (rltlOpt->empty() && ltlOpt->empty()) throw Error("eval needs --rltl or --ltl");
      const bool robust = !rltlOpt->empty();
      const Formula phi = parse(robust ? rltlText : ltlText, robust ? Logic::RLTL : Logic::LTL);
      const LassoWord raw = LassoWord::parse(wordText);
      const LassoWord word = raw.withAlphabet(unionAtoms(phi, raw));
      std::string result;
      if (robust) {
        result = evalRLTL(phi, word).str();
      } else {
        result = evalLTL(phi, word) ? "1" : "0";
      }
      if (asJson) {
        out << json{{"formula", phi.str()}, {"logic", logicName(phi.logic())}, {"word", word.str()},
                    {"value", result}}
                   .dump()
            << '\n';
      } else {
        out << result << '\n';
      }
      return kOk;
    }

    if (translate->parsed()) {
      const Formula phi = parse(formulaText, Logic::RLTL);
      const Formula psi = translateToLTL(phi, component);
      if (asJson) {
        out << json{{"formula", phi.str()}, {"component", component}, {"ltl", psi.str()}}.dump() << '\n';
      } else {
        out << psi.str() << '\n';
      }
      return kOk;
    }

    if (compileCmd->parsed()) {
      const Formula phi = parse(formulaText, Logic::RLTL);
      CompileOptions options;
      if (!apList.empty()) options.aps = apList;
      const Compilation c = compile(phi, options);
      const std::string hoa = writeHoa(c.automaton, phi.str());
      if (!outPath.empty()) {
        std::ofstream file(outPath, std::ios::binary);
        if (!file) throw Error("cannot write '" + outPath + "'");
        file << hoa;
      }
      if (asJson) {
        json valueStates = json::object();
        for (TruthValue b : TruthValue::all()) valueStates[b.str()] = c.automaton.valueState(b);
        out << json{{"formula", phi.str()},
                    {"closure", c.closure.size()},
                    {"states", c.automaton.stateCount()},
                    {"edges", c.automaton.edgeCount()},
                    {"acceptanceSets", c.automaton.acceptanceSetCount()},
                    {"valueStates", valueStates}}
                   .dump()
            << '\n';
      } else if (outPath.empty()) {
        out << hoa;
      }
      return kOk;
    }

    if (mc->parsed()) {
      if (exactOpt->empty() && atLeastOpt->empty()) throw Error("mc needs --exact or --at-least");
      const Gba system = readHoa(slurp(systemPath));
      const Formula phi = parse(formulaText, Logic::RLTL);
      const ModelCheckResult r = exactOpt->empty() ? mcAtLeast(system, phi, value(atLeastText))
                                                   : mcExact(system, phi, value(exactText));
      if (asJson) {
        json j{{"formula", phi.str()},
               {"mode", queryModeName(r.mode)},
               {"value", r.queriedValue.str()},
               {"verdict", r.verdict},
               {"productStates", r.productStates}};
        if (r.counterexample) {
          j["counterexample"] = r.counterexample->str();
          j["counterexampleValue"] = evalRLTL(phi, *r.counterexample).str();
        }
        out << j.dump() << '\n';
      } else {
        out << (r.verdict ? "true" : "false") << '\n';
        if (r.counterexample) {
          out << "counterexample: " << r.counterexample->str() << '\n';
          out << "value: " << evalRLTL(phi, *r.counterexample).str() << '\n';
        }
      }
      return r.verdict ? kOk : kNegative;
    }

    if (best->parsed()) {
      const Gba system = readHoa(slurp(systemPath));
      const Formula phi = parse(formulaText, Logic::RLTL);
      const BestValue b = bestValue(system, phi);
      if (asJson) {
        out << json{{"formula", phi.str()}, {"value", b.value.str()}, {"vacuous", b.vacuous}}.dump() << '\n';
      } else {
        out << b.value.str() << (b.vacuous ? " (vacuous: the system accepts no word)" : "") << '\n';
      }
      return kOk;
    }

    if (synth->parsed()) {
      if (targetsOpt->empty() && synthAtLeastOpt->empty()) throw Error("synth needs --targets or --at-least");
      const GameGraph g = parseGame(slurp(gamePath));
      const Formula phi = parse(formulaText, Logic::RLTL);
      const std::vector<TruthValue> targets =
          targetsOpt->empty() ? atLeast(value(synthAtLeast)) : valueList(targetsText);
      SynthesisOptions options;
      if (!vertexName.empty()) {
        const auto v = g.find(vertexName);
        if (!v) throw Error("unknown vertex '" + vertexName + "'");
        options.start = *v;
      }
      const SynthesisResult r = synthesize(g, phi, targets, options);
      if (asJson) {
        json table = json::array();
        for (std::size_t m = 0; m < r.strategy.memory.size(); ++m) {
          const Strategy::Memory& mem = r.strategy.memory[m];
          json next = json::object();
          for (const auto& [observed, target] : mem.next) next[g.name(observed)] = target;
          json row{{"memory", m}, {"vertex", g.name(mem.vertex)}, {"next", next}, {"note", mem.note}};
          if (mem.move != kNoMove) row["move"] = g.name(mem.move);
          table.push_back(std::move(row));
        }
        out << json{{"formula", phi.str()},
                    {"targets", valuesJson(targets)},
                    {"winner", playerName(r.winner)},
                    {"initialMemory", r.strategy.initialMemory},
                    {"strategy", table},
                    {"buchiStates", r.buchiStates},
                    {"rabinStates", r.rabinStates},
                    {"rabinPairs", r.rabinPairs},
                    {"productVertices", r.productVertices},
                    {"parityVertices", r.parityVertices}}
                   .dump()
            << '\n';
      } else {
        out << "winner: " << playerName(r.winner) << '\n';
        out << strategyTable(g, r.strategy);
      }
      return r.winner == Player::Zero ? kOk : kNegative;
    }

    if (self->parsed()) {
      const Selftest t = selftest(seed, count);
      if (asJson) {
        out << json{{"seed", seed}, {"checked", t.checked}, {"failures", t.failures}}.dump() << '\n';
      } else {
        out << "selftest seed " << seed << ": " << t.checked << " checks, " << t.failures.size() << " failures\n";
        for (const std::string& f : t.failures) out << "  " << f << '\n';
      }
      return t.failures.empty() ? kOk : kNegative;
    }
  } catch (const std::exception& e) {
    if (asJson) {
      out << json{{"error", e.what()}}.dump() << '\n';
    } else {
      err << "error: " << e.what() << '\n';
    }
    return kError;
  }
  return kError;
}

}  // namespace rltl::cli
