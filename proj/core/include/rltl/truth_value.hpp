#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace rltl {

/// One of the five elements of the chain 0000 < 0001 < 0011 < 0111 < 1111.
///
/// Only monotone 4-tuples (b1 <= b2 <= b3 <= b4) are representable, so the
/// value is stored as its rank in the chain: the number of set bits.
class TruthValue {
public:
  constexpr TruthValue() noexcept = default;

  static constexpr TruthValue bottom() noexcept { return TruthValue(0); }
  static constexpr TruthValue top() noexcept { return TruthValue(4); }

  /// Throws std::out_of_range unless 0 <= rank <= 4.
  static TruthValue fromRank(int rank);

  /// Throws std::invalid_argument for the eleven non-monotone tuples.
  static TruthValue fromBits(const std::array<bool, 4>& bits);

  /// Accepts the bit strings "0000" ... "1111" and the aliases "true"/"false".
  static std::optional<TruthValue> parse(std::string_view text);

  static constexpr std::array<TruthValue, 5> all() noexcept {
    return {TruthValue(0), TruthValue(1), TruthValue(2), TruthValue(3), TruthValue(4)};
  }

  constexpr int rank() const noexcept { return rank_; }

  /// Component k in 1..4; throws std::out_of_range otherwise.
  bool bit(int k) const;

  /// Unchecked component access for hot loops, k in 1..4.
  constexpr bool component(int k) const noexcept { return rank_ >= 5 - k; }

  constexpr bool isTop() const noexcept { return rank_ == 4; }

  std::string str() const;

  friend constexpr auto operator<=>(TruthValue, TruthValue) noexcept = default;

private:
  constexpr explicit TruthValue(std::uint8_t rank) noexcept : rank_(rank) {}

  std::uint8_t rank_ = 0;
};

std::ostream& operator<<(std::ostream& os, TruthValue value);

constexpr TruthValue meet(TruthValue a, TruthValue b) noexcept { return a < b ? a : b; }
constexpr TruthValue join(TruthValue a, TruthValue b) noexcept { return a < b ? b : a; }

/// Residual of meet: top when a <= b, otherwise b.
constexpr TruthValue implies(TruthValue a, TruthValue b) noexcept {
  return a <= b ? TruthValue::top() : b;
}

/// Dualized negation: top goes to bottom, every shade of false goes to top.
constexpr TruthValue negate(TruthValue a) noexcept {
  return a.isTop() ? TruthValue::bottom() : TruthValue::top();
}

/// Projection onto component k in 1..4.
bool project(TruthValue a, int k);

}  // namespace rltl
