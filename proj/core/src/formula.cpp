#include "rltl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "rltl/error.hpp"

namespace rltl {

struct Formula::Node {
  Op op;
  std::string name;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::size_t hash = 0;
  std::size_t size = 1;
};

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t arityOf(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::True:
    case Op::False:
      return 0;
    case Op::Not:
    case Op::Next:
    case Op::Always:
    case Op::Eventually:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

const char* logicName(Logic logic) { return logic == Logic::LTL ? "ltl" : "rltl"; }

Formula Formula::make(Op op, std::string name, const Formula* a, const Formula* b, Logic logic) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->name = std::move(name);
  std::size_t h = combine(std::hash<int>{}(static_cast<int>(op)), std::hash<std::string>{}(node->name));
  if (a) {
    node->a = a->node_;
    h = combine(h, node->a->hash);
    node->size += node->a->size;
  }
  if (b) {
    node->b = b->node_;
    h = combine(h, node->b->hash);
    node->size += node->b->size;
  }
  node->hash = h;
  return Formula(std::move(node), logic);
}

Formula Formula::atom(std::string name, Logic logic) {
  if (name.empty()) throw Error("atom name must not be empty");
  return make(Op::Atom, std::move(name), nullptr, nullptr, logic);
}

Formula Formula::constant(bool value, Logic logic) {
  return make(value ? Op::True : Op::False, {}, nullptr, nullptr, logic);
}

Formula Formula::unary(Op op, Formula f) {
  if (arityOf(op) != 1) throw Error("operator is not unary");
  return make(op, {}, &f, nullptr, f.logic());
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  if (arityOf(op) != 2) throw Error("operator is not binary");
  if (a.logic() != b.logic()) throw Error("operands are tagged with different logics");
  return make(op, {}, &a, &b, a.logic());
}

Formula Formula::negation(Formula f) { return unary(Op::Not, std::move(f)); }
Formula Formula::next(Formula f) { return unary(Op::Next, std::move(f)); }
Formula Formula::always(Formula f) { return unary(Op::Always, std::move(f)); }
Formula Formula::eventually(Formula f) { return unary(Op::Eventually, std::move(f)); }
Formula Formula::conjunction(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
Formula Formula::disjunction(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
Formula Formula::implication(Formula a, Formula b) { return binary(Op::Implies, std::move(a), std::move(b)); }
Formula Formula::release(Formula a, Formula b) { return binary(Op::Release, std::move(a), std::move(b)); }
Formula Formula::until(Formula a, Formula b) { return binary(Op::Until, std::move(a), std::move(b)); }

Op Formula::op() const noexcept { return node_->op; }
const std::string& Formula::name() const noexcept { return node_->name; }
std::size_t Formula::arity() const noexcept { return arityOf(node_->op); }
std::size_t Formula::size() const noexcept { return node_->size; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

Formula Formula::child(std::size_t index) const {
  if (index >= arity()) throw std::out_of_range("formula child index out of range");
  return Formula(index == 0 ? node_->a : node_->b, logic_);
}

bool Formula::isTemporal() const noexcept {
  switch (node_->op) {
    case Op::Next:
    case Op::Always:
    case Op::Eventually:
    case Op::Release:
    case Op::Until:
      return true;
    default:
      return false;
  }
}

Formula Formula::withLogic(Logic logic) const { return Formula(node_, logic); }

bool Formula::sameTree(const Formula& other) const noexcept {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  std::vector<std::pair<const Node*, const Node*>> stack{{x, y}};
  while (!stack.empty()) {
    auto [p, q] = stack.back();
    stack.pop_back();
    if (p == q) continue;
    if (p->hash != q->hash || p->op != q->op || p->size != q->size || p->name != q->name) return false;
    if (p->a) stack.emplace_back(p->a.get(), q->a.get());
    if (p->b) stack.emplace_back(p->b.get(), q->b.get());
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Ident, True, False, Not, And, Or, Arrow, X, G, F, U, R, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, {}, i_});
        return out;
      }
      const std::size_t start = i_;
      const char c = src_[i_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        while (i_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_')) {
          ++i_;
        }
        std::string word(src_.substr(start, i_ - start));
        out.push_back({keyword(word), word, start});
        continue;
      }
      ++i_;
      switch (c) {
        case '!': out.push_back({Tok::Not, "!", start}); break;
        case '&': out.push_back({Tok::And, "&", start}); break;
        case '|': out.push_back({Tok::Or, "|", start}); break;
        case '(': out.push_back({Tok::LParen, "(", start}); break;
        case ')': out.push_back({Tok::RParen, ")", start}); break;
        case '-':
          if (i_ < src_.size() && src_[i_] == '>') {
            ++i_;
            out.push_back({Tok::Arrow, "->", start});
            break;
          }
          throw ParseError("expected '->'", start);
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

private:
  static Tok keyword(const std::string& w) {
    if (w == "true") return Tok::True;
    if (w == "false") return Tok::False;
    if (w == "X") return Tok::X;
    if (w == "G") return Tok::G;
    if (w == "F") return Tok::F;
    if (w == "U") return Tok::U;
    if (w == "R") return Tok::R;
    return Tok::Ident;
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
public:
  Parser(std::vector<Token> toks, Logic logic) : toks_(std::move(toks)), logic_(logic) {}

  Formula run() {
    Formula f = implication();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      take();
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Or) {
      take();
      lhs = Formula::disjunction(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = temporal();
    while (peek().kind == Tok::And) {
      take();
      lhs = Formula::conjunction(lhs, temporal());
    }
    return lhs;
  }

  Formula temporal() {
    Formula lhs = unary();
    if (peek().kind == Tok::U || peek().kind == Tok::R) {
      const Op op = take().kind == Tok::U ? Op::Until : Op::Release;
      return Formula::binary(op, lhs, temporal());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::negation(unary());
      case Tok::X: take(); return Formula::next(unary());
      case Tok::G: take(); return Formula::always(unary());
      case Tok::F: take(); return Formula::eventually(unary());
      default: return primary();
    }
  }

  Formula primary() {
    const Token& t = take();
    switch (t.kind) {
      case Tok::Ident: return Formula::atom(t.text, logic_);
      case Tok::True: return Formula::constant(true, logic_);
      case Tok::False: return Formula::constant(false, logic_);
      case Tok::LParen: {
        Formula inner = implication();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        take();
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  Logic logic_;
  std::size_t i_ = 0;
};

}  // namespace

Formula parse(std::string_view text, Logic logic) {
  return Parser(Lexer(text).run(), logic).run();
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Until:
    case Op::Release: return 4;
    case Op::Not:
    case Op::Next:
    case Op::Always:
    case Op::Eventually: return 5;
    default: return 6;
  }
}

void print(std::ostream& os, const Formula& f, int minPrec) {
  const int p = precedence(f.op());
  const bool paren = p < minPrec;
  if (paren) os << '(';
  switch (f.op()) {
    case Op::Atom: os << f.name(); break;
    case Op::True: os << "true"; break;
    case Op::False: os << "false"; break;
    case Op::Not:
      os << '!';
      print(os, f.lhs(), 5);
      break;
    case Op::Next:
    case Op::Always:
    case Op::Eventually:
      os << (f.op() == Op::Next ? "X " : f.op() == Op::Always ? "G " : "F ");
      print(os, f.lhs(), 5);
      break;
    case Op::And:
    case Op::Or:
      print(os, f.lhs(), p);
      os << (f.op() == Op::And ? " & " : " | ");
      print(os, f.rhs(), p + 1);
      break;
    case Op::Implies:
    case Op::Until:
    case Op::Release:
      print(os, f.lhs(), p + 1);
      os << (f.op() == Op::Implies ? " -> " : f.op() == Op::Until ? " U " : " R ");
      print(os, f.rhs(), p);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string Formula::str() const {
  std::ostringstream os;
  print(os, *this, 0);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f, 0);
  return os;
}

std::vector<std::string> atoms(const Formula& f) {
  std::set<std::string> names;
  for (const Formula& g : Closure(f)) {
    if (g.op() == Op::Atom) names.insert(g.name());
  }
  return {names.begin(), names.end()};
}

Formula dot(const Formula& f) { return f.withLogic(Logic::RLTL); }
Formula undot(const Formula& f) { return f.withLogic(Logic::LTL); }

// ---------------------------------------------------------------------------
// Closure

Closure::Closure(const Formula& root) { visit(root); }

std::size_t Closure::visit(const Formula& f) {
  if (auto it = index_.find(f); it != index_.end()) return it->second;
  std::array<std::size_t, 2> kids{0, 0};
  for (std::size_t i = 0; i < f.arity(); ++i) kids[i] = visit(f.child(i));
  const std::size_t id = items_.size();
  items_.push_back(f);
  children_.push_back(kids);
  index_.emplace(f, id);
  return id;
}

std::optional<std::size_t> Closure::indexOf(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rltl
