#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rltl {

enum class Op : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Next,
  Always,
  Eventually,
  Release,
  Until,
};

/// Which reading a tree gets: classical LTL, or robust LTL with dotted
/// temporal operators. Both share the same node kinds.
enum class Logic : std::uint8_t { LTL, RLTL };

const char* logicName(Logic logic);

/// Immutable, structurally shared formula tree tagged with its logic.
class Formula {
public:
  static Formula atom(std::string name, Logic logic = Logic::RLTL);
  static Formula constant(bool value, Logic logic = Logic::RLTL);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula next(Formula f);
  static Formula always(Formula f);
  static Formula eventually(Formula f);
  static Formula release(Formula a, Formula b);
  static Formula until(Formula a, Formula b);
  static Formula unary(Op op, Formula f);
  static Formula binary(Op op, Formula a, Formula b);

  Op op() const noexcept;
  Logic logic() const noexcept { return logic_; }
  /// Atom name; empty for every other node kind.
  const std::string& name() const noexcept;
  std::size_t arity() const noexcept;
  Formula child(std::size_t index) const;
  Formula lhs() const { return child(0); }
  Formula rhs() const { return child(1); }

  bool isTemporal() const noexcept;
  /// Number of nodes in the tree, counting repeated subtrees repeatedly.
  std::size_t size() const noexcept;
  std::size_t hash() const noexcept;

  Formula withLogic(Logic logic) const;

  /// Concrete syntax with the minimal parentheses `parse` needs.
  std::string str() const;

  /// Structural equality ignoring the logic tag.
  bool sameTree(const Formula& other) const noexcept;
  /// Address of the underlying node; equal trees may have distinct ids.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept {
    return a.logic_ == b.logic_ && a.sameTree(b);
  }

private:
  struct Node;
  Formula(std::shared_ptr<const Node> node, Logic logic) : node_(std::move(node)), logic_(logic) {}
  static Formula make(Op op, std::string name, const Formula* a, const Formula* b, Logic logic);

  std::shared_ptr<const Node> node_;
  Logic logic_ = Logic::RLTL;
};

struct FormulaTreeHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

struct FormulaTreeEqual {
  bool operator()(const Formula& a, const Formula& b) const noexcept { return a.sameTree(b); }
};

/// Parses the concrete syntax: `!`, `&`, `|`, `->`, `X`, `G`, `F`, `U`, `R`,
/// `true`, `false`, identifiers and parentheses. Unary operators bind
/// tightest, then U/R (right-associative), `&`, `|`, and `->`
/// (right-associative). Throws ParseError.
Formula parse(std::string_view text, Logic logic);

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Sorted, duplicate-free atom names occurring in `f`.
std::vector<std::string> atoms(const Formula& f);

/// Same tree read with dotted temporal operators.
Formula dot(const Formula& f);
/// Same tree read as classical LTL.
Formula undot(const Formula& f);

/// Distinct subformulas ordered children-before-parents; the formula itself
/// is last.
class Closure {
public:
  explicit Closure(const Formula& root);

  std::size_t size() const noexcept { return items_.size(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Formula>& items() const noexcept { return items_; }
  std::size_t rootIndex() const noexcept { return items_.size() - 1; }

  std::optional<std::size_t> indexOf(const Formula& f) const;
  /// Closure indices of the children of item i (arity entries are valid).
  const std::array<std::size_t, 2>& children(std::size_t i) const { return children_[i]; }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

private:
  std::size_t visit(const Formula& f);

  std::vector<Formula> items_;
  std::vector<std::array<std::size_t, 2>> children_;
  std::unordered_map<Formula, std::size_t, FormulaTreeHash, FormulaTreeEqual> index_;
};

inline Closure closure(const Formula& f) { return Closure(f); }

}  // namespace rltl

template <>
struct std::hash<rltl::Formula> {
  std::size_t operator()(const rltl::Formula& f) const noexcept { return f.hash(); }
};
