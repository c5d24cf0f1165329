#include "rltl/lasso.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "rltl/error.hpp"

namespace rltl {

namespace {

bool sortedUnique(const std::vector<std::string>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

}  // namespace

LassoWord::LassoWord(std::vector<std::string> alphabet, std::vector<Letter> prefix, std::vector<Letter> loop)
    : alphabet_(std::move(alphabet)), prefix_(std::move(prefix)), loop_(std::move(loop)) {
  if (loop_.empty()) throw Error("lasso loop must be nonempty");
  if (alphabet_.size() > kMaxAtoms) throw Error("too many atoms for a lasso word");
  if (!sortedUnique(alphabet_)) throw Error("lasso alphabet must be sorted and duplicate-free");
  const Letter allowed = alphabet_.size() == kMaxAtoms ? ~Letter{0} : (Letter{1} << alphabet_.size()) - 1;
  for (const auto* part : {&prefix_, &loop_}) {
    for (Letter a : *part) {
      if ((a & ~allowed) != 0) throw AlphabetMismatch("letter uses an atom outside the alphabet");
    }
  }
}

LassoWord LassoWord::parse(std::string_view text, const std::optional<std::vector<std::string>>& alphabet) {
  using Set = std::vector<std::string>;
  std::vector<Set> parts[2];
  int section = 0;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == ';') {
      if (section == 1) throw ParseError("second ';' in lasso word", i);
      section = 1;
      ++i;
      continue;
    }
    if (text[i] != '{') throw ParseError("expected '{' or ';'", i);
    ++i;
    Set letter;
    skip();
    if (i < text.size() && text[i] == '}') {
      ++i;
      parts[section].push_back(letter);
      continue;
    }
    while (true) {
      skip();
      const std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      if (start == i) throw ParseError("expected atom name", i);
      letter.emplace_back(text.substr(start, i - start));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == '}') {
        ++i;
        break;
      }
      throw ParseError("expected ',' or '}'", i);
    }
    parts[section].push_back(std::move(letter));
  }
  if (section == 0) throw ParseError("missing ';' between prefix and loop", text.size());
  if (parts[1].empty()) throw ParseError("lasso loop must be nonempty", text.size());

  std::vector<std::string> atoms;
  if (alphabet) {
    atoms = *alphabet;
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  } else {
    std::set<std::string> seen;
    for (const auto& part : parts) {
      for (const auto& letter : part) seen.insert(letter.begin(), letter.end());
    }
    atoms.assign(seen.begin(), seen.end());
  }
  if (atoms.size() > kMaxAtoms) throw Error("too many atoms for a lasso word");

  auto encode = [&](const Set& letter) {
    Letter mask = 0;
    for (const auto& name : letter) {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
      if (it == atoms.end() || *it != name) throw AlphabetMismatch("atom '" + name + "' is not in the alphabet");
      mask |= Letter{1} << static_cast<std::size_t>(it - atoms.begin());
    }
    return mask;
  };
  std::vector<Letter> prefix, loop;
  for (const auto& l : parts[0]) prefix.push_back(encode(l));
  for (const auto& l : parts[1]) loop.push_back(encode(l));
  return LassoWord(std::move(atoms), std::move(prefix), std::move(loop));
}

Letter LassoWord::at(std::size_t i) const noexcept {
  if (i < prefix_.size()) return prefix_[i];
  return loop_[(i - prefix_.size()) % loop_.size()];
}

std::size_t LassoWord::canonical(std::size_t i) const noexcept {
  if (i < prefix_.size()) return i;
  return prefix_.size() + (i - prefix_.size()) % loop_.size();
}

std::optional<std::size_t> LassoWord::atomIndex(std::string_view name) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet_.begin());
}

LassoWord LassoWord::suffix(std::size_t i) const {
  if (i < prefix_.size()) {
    return LassoWord(alphabet_, {prefix_.begin() + static_cast<std::ptrdiff_t>(i), prefix_.end()}, loop_);
  }
  const std::size_t shift = (i - prefix_.size()) % loop_.size();
  std::vector<Letter> loop(loop_.begin() + static_cast<std::ptrdiff_t>(shift), loop_.end());
  loop.insert(loop.end(), loop_.begin(), loop_.begin() + static_cast<std::ptrdiff_t>(shift));
  return LassoWord(alphabet_, {}, std::move(loop));
}

LassoWord LassoWord::withAlphabet(std::vector<std::string> alphabet) const {
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<std::size_t> map(alphabet_.size());
  for (std::size_t k = 0; k < alphabet_.size(); ++k) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), alphabet_[k]);
    map[k] = (it == alphabet.end() || *it != alphabet_[k]) ? kMaxAtoms : static_cast<std::size_t>(it - alphabet.begin());
  }
  auto remap = [&](Letter a) {
    Letter out = 0;
    for (std::size_t k = 0; k < alphabet_.size(); ++k) {
      if ((a >> k & 1) == 0) continue;
      if (map[k] == kMaxAtoms) throw AlphabetMismatch("atom '" + alphabet_[k] + "' is not in the new alphabet");
      out |= Letter{1} << map[k];
    }
    return out;
  };
  std::vector<Letter> prefix, loop;
  for (Letter a : prefix_) prefix.push_back(remap(a));
  for (Letter a : loop_) loop.push_back(remap(a));
  return LassoWord(std::move(alphabet), std::move(prefix), std::move(loop));
}

std::string LassoWord::letterString(Letter a) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t k = 0; k < alphabet_.size(); ++k) {
    if ((a >> k & 1) == 0) continue;
    if (!first) out += ',';
    out += alphabet_[k];
    first = false;
  }
  return out + "}";
}

std::string LassoWord::str() const {
  std::string out;
  for (Letter a : prefix_) out += letterString(a) + " ";
  out += ";";
  for (Letter a : loop_) out += " " + letterString(a);
  return out;
}

std::ostream& operator<<(std::ostream& os, const LassoWord& w) { return os << w.str(); }

}  // namespace rltl
