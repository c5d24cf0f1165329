#include "rltl/truth_value.hpp"

#include <stdexcept>

namespace rltl {

TruthValue TruthValue::fromRank(int rank) {
  if (rank < 0 || rank > 4) {
    throw std::out_of_range("truth value rank must lie in 0..4, got " + std::to_string(rank));
  }
  return TruthValue(static_cast<std::uint8_t>(rank));
}

TruthValue TruthValue::fromBits(const std::array<bool, 4>& bits) {
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (bits[i - 1] && !bits[i]) {
      std::string text;
      for (bool b : bits) text += b ? '1' : '0';
      throw std::invalid_argument("non-monotone tuple " + text + " is not a truth value");
    }
  }
  int ones = 0;
  for (bool b : bits) ones += b ? 1 : 0;
  return TruthValue(static_cast<std::uint8_t>(ones));
}

std::optional<TruthValue> TruthValue::parse(std::string_view text) {
  if (text == "true") return top();
  if (text == "false") return bottom();
  if (text.size() != 4) return std::nullopt;
  std::array<bool, 4> bits{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (text[i] != '0' && text[i] != '1') return std::nullopt;
    bits[i] = text[i] == '1';
  }
  for (std::size_t i = 1; i < 4; ++i) {
    if (bits[i - 1] && !bits[i]) return std::nullopt;
  }
  return fromBits(bits);
}

bool TruthValue::bit(int k) const {
  if (k < 1 || k > 4) {
    throw std::out_of_range("projection index must lie in 1..4, got " + std::to_string(k));
  }
  return component(k);
}

std::string TruthValue::str() const {
  std::string text(4, '0');
  for (int k = 1; k <= 4; ++k) {
    if (component(k)) text[static_cast<std::size_t>(k - 1)] = '1';
  }
  return text;
}

std::ostream& operator<<(std::ostream& os, TruthValue value) { return os << value.str(); }

bool project(TruthValue a, int k) { return a.bit(k); }

}  // namespace rltl
