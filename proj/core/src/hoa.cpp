#include "rltl/hoa.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "rltl/error.hpp"

namespace rltl {
namespace {

void writeQuoted(std::ostream& os, std::string_view text) {
  os << '"';
  for (char c : text) {
    if (c == '"' || c == '\\') os << '\\';
    os << c;
  }
  os << '"';
}

void writeGuard(std::ostream& os, const Guard& g, std::size_t apCount) {
  if (g.care == 0) {
    os << 't';
    return;
  }
  bool first = true;
  for (std::size_t i = 0; i < apCount; ++i) {
    const Letter bit = Letter{1} << i;
    if (!(g.care & bit)) continue;
    if (!first) os << '&';
    first = false;
    if (!(g.value & bit)) os << '!';
    os << i;
  }
}

// ---------------------------------------------------------------------------

enum class Tok { End, Header, Ident, Int, String, Alias, Punct };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, tok_.pos); }

  Token expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail(std::string("expected ") + what);
    return take();
  }

  void expectPunct(char c) {
    if (tok_.kind != Tok::Punct || tok_.text[0] != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool acceptPunct(char c) {
    if (tok_.kind == Tok::Punct && tok_.text[0] == c) {
      advance();
      return true;
    }
    return false;
  }

  std::size_t integer() {
    const Token t = expect(Tok::Int, "integer");
    return std::stoul(t.text);
  }

private:
  void skipSpaceAndComments() {
    for (;;) {
      while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
      if (text_.compare(i_, 2, "/*") != 0) return;
      const auto close = text_.find("*/", i_ + 2);
      if (close == std::string_view::npos) throw ParseError("unterminated comment", i_);
      i_ = close + 2;
    }
  }

  static bool identChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  }

  void advance() {
    skipSpaceAndComments();
    tok_ = Token{};
    tok_.pos = i_;
    if (i_ >= text_.size()) return;
    const char c = text_[i_];
    if (c == '"') {
      std::string s;
      ++i_;
      while (i_ < text_.size() && text_[i_] != '"') {
        if (text_[i_] == '\\' && i_ + 1 < text_.size()) ++i_;
        s += text_[i_++];
      }
      if (i_ >= text_.size()) throw ParseError("unterminated string", tok_.pos);
      ++i_;
      tok_.kind = Tok::String;
      tok_.text = std::move(s);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      tok_.kind = Tok::Int;
      tok_.text = std::string(text_.substr(start, i_ - start));
      return;
    }
    if (c == '@') {
      const std::size_t start = ++i_;
      while (i_ < text_.size() && identChar(text_[i_])) ++i_;
      tok_.kind = Tok::Alias;
      tok_.text = std::string(text_.substr(start, i_ - start));
      return;
    }
    if (text_.compare(i_, 8, "--BODY--") == 0 || text_.compare(i_, 7, "--END--") == 0) {
      const std::size_t len = text_[i_ + 2] == 'B' ? 8 : 7;
      tok_.kind = Tok::Ident;
      tok_.text = std::string(text_.substr(i_, len));
      i_ += len;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = i_;
      while (i_ < text_.size() && identChar(text_[i_])) ++i_;
      tok_.text = std::string(text_.substr(start, i_ - start));
      if (i_ < text_.size() && text_[i_] == ':') {
        ++i_;
        tok_.kind = Tok::Header;
      } else {
        tok_.kind = Tok::Ident;
      }
      return;
    }
    tok_.kind = Tok::Punct;
    tok_.text = std::string(1, c);
    ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
  Token tok_;
};

using Dnf = std::vector<Guard>;

Dnf conjoinDnf(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const Guard& x : a) {
    for (const Guard& y : b) {
      if (auto g = conjoin(x, y)) out.push_back(*g);
    }
  }
  return out;
}

Dnf negateDnf(const Dnf& a, std::size_t apCount) {
  Dnf out{Guard{}};
  for (const Guard& term : a) {
    Dnf clause;
    for (std::size_t i = 0; i < apCount; ++i) {
      const Letter bit = Letter{1} << i;
      if (term.care & bit) clause.push_back(Guard{bit, term.value & bit ? 0 : bit});
    }
    out = conjoinDnf(out, clause);
  }
  return out;
}

class LabelParser {
public:
  LabelParser(Lexer& lex, const std::vector<std::size_t>& apMap,
              const std::map<std::string, Dnf>& aliases)
      : lex_(lex), apMap_(apMap), aliases_(aliases) {}

  Dnf disjunction() {
    Dnf out = conjunction();
    while (lex_.acceptPunct('|')) {
      Dnf rhs = conjunction();
      out.insert(out.end(), rhs.begin(), rhs.end());
    }
    return out;
  }

private:
  Dnf conjunction() {
    Dnf out = unary();
    while (lex_.acceptPunct('&')) out = conjoinDnf(out, unary());
    return out;
  }

  Dnf unary() {
    if (lex_.acceptPunct('!')) return negateDnf(unary(), apMap_.size());
    if (lex_.acceptPunct('(')) {
      Dnf inner = disjunction();
      lex_.expectPunct(')');
      return inner;
    }
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident && (t.text == "t" || t.text == "f")) {
      const bool truth = t.text == "t";
      lex_.take();
      return truth ? Dnf{Guard{}} : Dnf{};
    }
    if (t.kind == Tok::Int) {
      const std::size_t index = lex_.integer();
      if (index >= apMap_.size()) lex_.fail("AP index out of range");
      const Letter bit = Letter{1} << apMap_[index];
      return Dnf{Guard{bit, bit}};
    }
    if (t.kind == Tok::Alias) {
      const auto it = aliases_.find(t.text);
      if (it == aliases_.end()) lex_.fail("unknown alias @" + t.text);
      lex_.take();
      return it->second;
    }
    lex_.fail("expected label expression");
  }

  Lexer& lex_;
  const std::vector<std::size_t>& apMap_;
  const std::map<std::string, Dnf>& aliases_;
};

}  // namespace

void writeHoa(std::ostream& os, const Gba& a, std::string_view name) {
  const std::size_t k = a.acceptanceSetCount();
  os << "HOA: v1\n";
  if (!name.empty()) {
    os << "name: ";
    writeQuoted(os, name);
    os << '\n';
  }
  os << "States: " << a.stateCount() << '\n';
  if (a.initial()) os << "Start: " << *a.initial() << '\n';
  if (a.hasValueStates()) {
    os << "rltl-start:";
    for (TruthValue b : TruthValue::all()) os << ' ' << a.valueState(b) << ' ' << b.str();
    os << '\n';
  }
  os << "AP: " << a.aps().size();
  for (const std::string& ap : a.aps()) {
    os << ' ';
    writeQuoted(os, ap);
  }
  os << '\n';
  os << "acc-name: generalized-Buchi " << k << '\n';
  os << "Acceptance: " << k;
  if (k == 0) os << " t";
  for (std::size_t i = 0; i < k; ++i) os << (i == 0 ? " " : "&") << "Inf(" << i << ')';
  os << '\n';
  os << "properties: state-acc explicit-labels\n";
  os << "--BODY--\n";
  for (StateId s = 0; s < a.stateCount(); ++s) {
    os << "State: " << s;
    if (!a.annotation(s).empty()) {
      os << ' ';
      writeQuoted(os, a.annotation(s));
    }
    if (!a.setsOf(s).empty()) {
      os << " {";
      for (std::size_t i = 0; i < a.setsOf(s).size(); ++i) os << (i ? " " : "") << a.setsOf(s)[i];
      os << '}';
    }
    os << '\n';
    for (const Edge& e : a.edges(s)) {
      os << '[';
      writeGuard(os, e.guard, a.aps().size());
      os << "] " << e.dst << '\n';
    }
  }
  os << "--END--\n";
}

std::string writeHoa(const Gba& a, std::string_view name) {
  std::ostringstream os;
  writeHoa(os, a, name);
  return os.str();
}

Gba readHoa(std::string_view text) {
  Lexer lex(text);
  if (lex.peek().kind != Tok::Header || lex.peek().text != "HOA") lex.fail("expected 'HOA:'");
  lex.take();
  if (lex.take().text != "v1") lex.fail("unsupported HOA version");

  std::optional<std::size_t> declaredStates;
  std::optional<std::size_t> start;
  std::size_t startPos = 0;
  std::size_t valueStatesPos = 0;
  std::vector<std::pair<std::size_t, TruthValue>> valueStates;
  std::vector<std::string> apsInFile;
  std::size_t setCount = 0;
  std::map<std::string, Dnf> aliases;
  std::vector<std::size_t> apMap;

  while (lex.peek().kind == Tok::Header) {
    const Token header = lex.take();
    const std::string& h = header.text;
    if (h == "States") {
      declaredStates = lex.integer();
    } else if (h == "Start") {
      if (start) lex.fail("multiple initial states are not supported");
      startPos = lex.peek().pos;
      start = lex.integer();
      if (lex.peek().kind == Tok::Punct && lex.peek().text == "&") lex.fail("alternating start not supported");
    } else if (h == "AP") {
      const std::size_t n = lex.integer();
      if (n > kMaxAtoms) lex.fail("too many atomic propositions");
      for (std::size_t i = 0; i < n; ++i) apsInFile.push_back(lex.expect(Tok::String, "AP name").text);
      std::vector<std::string> sorted = apsInFile;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ParseError("duplicate AP name", header.pos);
      }
      apMap.clear();
      for (const std::string& ap : apsInFile) {
        apMap.push_back(static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), ap) - sorted.begin()));
      }
    } else if (h == "Acceptance") {
      setCount = lex.integer();
      if (lex.peek().kind == Tok::Ident && lex.peek().text == "t") {
        lex.take();
        if (setCount != 0) lex.fail("acceptance 't' must declare 0 sets");
      } else {
        std::vector<char> seen(setCount, 0);
        do {
          const Token inf = lex.expect(Tok::Ident, "Inf");
          if (inf.text != "Inf") throw ParseError("only Inf(..) conjunctions are supported", inf.pos);
          lex.expectPunct('(');
          const std::size_t i = lex.integer();
          if (i >= setCount) lex.fail("acceptance set out of range");
          seen[i] = 1;
          lex.expectPunct(')');
        } while (lex.acceptPunct('&'));
        if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
          throw ParseError("every acceptance set must appear in Inf(..)", header.pos);
        }
      }
    } else if (h == "Alias") {
      const Token alias = lex.expect(Tok::Alias, "alias name");
      LabelParser labels(lex, apMap, aliases);
      aliases[alias.text] = labels.disjunction();
    } else if (h == "rltl-start") {
      valueStatesPos = header.pos;
      while (lex.peek().kind == Tok::Int) {
        const std::size_t state = lex.integer();
        const Token value = lex.take();
        const auto b = TruthValue::parse(value.text);
        if (!b) throw ParseError("expected truth value", value.pos);
        valueStates.emplace_back(state, *b);
      }
    } else {
      // name:, acc-name:, properties:, tool: and unknown headers carry no
      // information needed here.
      while (lex.peek().kind != Tok::Header && lex.peek().kind != Tok::End &&
             !(lex.peek().kind == Tok::Ident && lex.peek().text == "--BODY--")) {
        lex.take();
      }
    }
  }
  if (lex.peek().kind != Tok::Ident || lex.peek().text != "--BODY--") lex.fail("expected '--BODY--'");
  lex.take();

  std::vector<std::string> aps = apsInFile;
  std::sort(aps.begin(), aps.end());
  Gba out(aps);
  for (std::size_t i = 0; i < setCount; ++i) out.addAcceptanceSet("Inf(" + std::to_string(i) + ")");

  auto ensure = [&](std::size_t s, std::size_t pos) {
    if (declaredStates && s >= *declaredStates) throw ParseError("state index exceeds 'States:'", pos);
    while (out.stateCount() <= s) out.addState();
  };
  if (declaredStates) {
    while (out.stateCount() < *declaredStates) out.addState();
  }

  LabelParser labels(lex, apMap, aliases);
  while (lex.peek().kind == Tok::Header && lex.peek().text == "State") {
    lex.take();
    if (lex.peek().kind == Tok::Punct && lex.peek().text == "[") lex.fail("state labels are not supported");
    const std::size_t sPos = lex.peek().pos;
    const std::size_t s = lex.integer();
    ensure(s, sPos);
    if (lex.peek().kind == Tok::String) out.setAnnotation(static_cast<StateId>(s), lex.take().text);
    if (lex.acceptPunct('{')) {
      while (lex.peek().kind == Tok::Int) {
        const std::size_t set = lex.integer();
        if (set >= setCount) lex.fail("acceptance set out of range");
        out.addToSet(static_cast<StateId>(s), set);
      }
      lex.expectPunct('}');
    }
    while (lex.acceptPunct('[')) {
      const Dnf guard = labels.disjunction();
      lex.expectPunct(']');
      const std::size_t dstPos = lex.peek().pos;
      const std::size_t dst = lex.integer();
      ensure(dst, dstPos);
      if (lex.peek().kind == Tok::Punct && lex.peek().text == "{") {
        lex.fail("transition-based acceptance is not supported");
      }
      for (const Guard& g : guard) out.addEdge(static_cast<StateId>(s), g, static_cast<StateId>(dst));
    }
    if (lex.peek().kind == Tok::Int) lex.fail("implicit labels are not supported");
  }
  if (lex.peek().kind != Tok::Ident || lex.peek().text != "--END--") lex.fail("expected '--END--'");
  lex.take();

  if (start) {
    ensure(*start, startPos);
    out.setInitial(static_cast<StateId>(*start));
  }
  if (!valueStates.empty()) {
    std::array<StateId, 5> states{};
    std::array<bool, 5> given{};
    for (const auto& [state, b] : valueStates) {
      ensure(state, valueStatesPos);
      states[static_cast<std::size_t>(b.rank())] = static_cast<StateId>(state);
      given[static_cast<std::size_t>(b.rank())] = true;
    }
    if (std::find(given.begin(), given.end(), false) != given.end()) {
      throw ParseError("rltl-start must name all five values", valueStatesPos);
    }
    out.setValueStates(states);
  }
  return out;
}

}  // namespace rltl
