#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rltl {

/// A set of atomic propositions, as a bitmask over a sorted atom list.
using Letter = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 64;

/// Ultimately periodic word u·v^ω over 2^P.
///
/// Positions 0 .. |u|+|v|-1 index the distinct suffixes; position i >= |u|
/// stands for every i + m·|v|.
class LassoWord {
public:
  /// `alphabet` must be sorted and duplicate-free; `loop` must be nonempty;
  /// letters may only use bits below alphabet.size().
  LassoWord(std::vector<std::string> alphabet, std::vector<Letter> prefix, std::vector<Letter> loop);

  /// Reads `{p,q} {} ; {p}`. Without a declared alphabet, the alphabet is the
  /// set of atoms mentioned in the word. Throws ParseError.
  static LassoWord parse(std::string_view text,
                         const std::optional<std::vector<std::string>>& alphabet = std::nullopt);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::vector<Letter>& prefix() const noexcept { return prefix_; }
  const std::vector<Letter>& loop() const noexcept { return loop_; }
  std::size_t prefixLength() const noexcept { return prefix_.size(); }
  std::size_t loopLength() const noexcept { return loop_.size(); }
  /// Number of distinct suffix positions, |u| + |v|.
  std::size_t positions() const noexcept { return prefix_.size() + loop_.size(); }

  /// Letter at any position of the infinite word.
  Letter at(std::size_t i) const noexcept;
  /// Successor of a canonical position, wrapping back into the loop.
  std::size_t next(std::size_t pos) const noexcept {
    return pos + 1 < positions() ? pos + 1 : prefix_.size();
  }
  /// Canonical position of absolute index i.
  std::size_t canonical(std::size_t i) const noexcept;

  std::optional<std::size_t> atomIndex(std::string_view name) const;

  /// The word σ read from index i on.
  LassoWord suffix(std::size_t i) const;

  /// Same word over a different alphabet; throws AlphabetMismatch if a letter
  /// uses an atom missing from `alphabet`.
  LassoWord withAlphabet(std::vector<std::string> alphabet) const;

  std::string letterString(Letter a) const;
  std::string str() const;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;

private:
  std::vector<std::string> alphabet_;
  std::vector<Letter> prefix_;
  std::vector<Letter> loop_;
};

std::ostream& operator<<(std::ostream& os, const LassoWord& w);

}  // namespace rltl
