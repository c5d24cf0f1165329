#include "rltl/game.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "rltl/error.hpp"

namespace rltl {

const char* playerName(Player p) { return p == Player::Zero ? "player0" : "player1"; }

GameGraph::GameGraph(std::vector<std::string> aps) : aps_(std::move(aps)) {
  if (!std::is_sorted(aps_.begin(), aps_.end()) ||
      std::adjacent_find(aps_.begin(), aps_.end()) != aps_.end()) {
    throw Error("game AP list must be sorted and duplicate-free");
  }
  if (aps_.size() > kMaxAtoms) throw Error("too many atomic propositions");
}

VertexId GameGraph::addVertex(std::string name, Player owner, Letter label) {
  if (find(name)) throw Error("duplicate vertex '" + name + "'");
  if (aps_.size() < kMaxAtoms && (label >> aps_.size()) != 0) throw Error("label uses unknown atoms");
  names_.push_back(std::move(name));
  owners_.push_back(owner);
  labels_.push_back(label);
  successors_.emplace_back();
  return static_cast<VertexId>(names_.size() - 1);
}

void GameGraph::addEdge(VertexId from, VertexId to) {
  if (to >= size()) throw Error("edge target out of range");
  auto& out = successors_.at(from);
  if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
}

std::optional<VertexId> GameGraph::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

void GameGraph::setInitial(VertexId v) {
  if (v >= size()) throw Error("initial vertex out of range");
  initial_ = v;
}

void GameGraph::validate() const {
  if (size() == 0) throw Error("game has no vertices");
  for (VertexId v = 0; v < size(); ++v) {
    if (successors_[v].empty()) throw Error("vertex '" + names_[v] + "' has no successor");
  }
}

LassoWord GameGraph::trace(const std::vector<VertexId>& prefix, const std::vector<VertexId>& cycle) const {
  std::vector<Letter> u, v;
  for (VertexId x : prefix) u.push_back(label(x));
  for (VertexId x : cycle) v.push_back(label(x));
  return LassoWord(aps_, std::move(u), std::move(v));
}

namespace {

struct VertexLine {
  std::string name;
  Player owner;
  std::vector<std::string> label;
  std::size_t pos;
};

bool isName(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  });
}

/// Splits a line into words, treating a `{...}` group as one word.
std::vector<std::pair<std::string, std::size_t>> words(std::string_view line, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '{') {
      const auto close = line.find('}', i);
      if (close == std::string_view::npos) throw ParseError("unterminated label set", base + i);
      i = close + 1;
    } else {
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    }
    out.emplace_back(std::string(line.substr(start, i - start)), base + start);
  }
  return out;
}

std::vector<std::string> labelAtoms(const std::string& word, std::size_t pos) {
  if (word.size() < 2 || word.front() != '{' || word.back() != '}') throw ParseError("expected label set", pos);
  std::vector<std::string> out;
  std::string current;
  auto flush = [&](std::size_t at) {
    if (current.empty()) return;
    if (!isName(current)) throw ParseError("bad atom name '" + current + "'", at);
    out.push_back(current);
    current.clear();
  };
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    const char c = word[i];
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush(pos + i);
    } else {
      current += c;
    }
  }
  flush(pos + word.size() - 1);
  return out;
}

}  // namespace

GameGraph parseGame(std::string_view text) {
  std::optional<std::vector<std::string>> declared;
  std::vector<VertexLine> vertices;
  std::vector<std::pair<std::vector<std::pair<std::string, std::size_t>>, std::size_t>> edges;
  std::optional<std::pair<std::string, std::size_t>> initial;

  std::size_t lineStart = 0;
  while (lineStart <= text.size()) {
    std::size_t lineEnd = text.find('\n', lineStart);
    if (lineEnd == std::string_view::npos) lineEnd = text.size();
    std::string_view line = text.substr(lineStart, lineEnd - lineStart);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto w = words(line, lineStart);
    if (!w.empty()) {
      const auto& [keyword, kpos] = w.front();
      if (keyword == "aps") {
        std::vector<std::string> aps;
        for (std::size_t i = 1; i < w.size(); ++i) {
          if (!isName(w[i].first)) throw ParseError("bad atom name", w[i].second);
          aps.push_back(w[i].first);
        }
        declared = std::move(aps);
      } else if (keyword == "vertex") {
        if (w.size() != 4) throw ParseError("expected 'vertex <name> <owner> {labels}'", kpos);
        if (!isName(w[1].first)) throw ParseError("bad vertex name", w[1].second);
        if (w[2].first != "0" && w[2].first != "1") throw ParseError("owner must be 0 or 1", w[2].second);
        vertices.push_back({w[1].first, w[2].first == "0" ? Player::Zero : Player::One,
                            labelAtoms(w[3].first, w[3].second), w[1].second});
      } else if (keyword == "edge") {
        if (w.size() < 3) throw ParseError("expected 'edge <from> <to>...'", kpos);
        edges.emplace_back(std::vector(w.begin() + 1, w.end()), kpos);
      } else if (keyword == "initial") {
        if (w.size() != 2) throw ParseError("expected 'initial <name>'", kpos);
        initial = w[1];
      } else {
        throw ParseError("unknown keyword '" + keyword + "'", kpos);
      }
    }
    lineStart = lineEnd + 1;
  }

  std::vector<std::string> aps;
  if (declared) {
    aps = *declared;
  } else {
    for (const auto& v : vertices) aps.insert(aps.end(), v.label.begin(), v.label.end());
  }
  std::sort(aps.begin(), aps.end());
  aps.erase(std::unique(aps.begin(), aps.end()), aps.end());

  GameGraph g(aps);
  for (const auto& v : vertices) {
    Letter label = 0;
    for (const std::string& atom : v.label) {
      const auto it = std::lower_bound(aps.begin(), aps.end(), atom);
      if (it == aps.end() || *it != atom) throw ParseError("atom '" + atom + "' not declared in aps", v.pos);
      label |= Letter{1} << (it - aps.begin());
    }
    if (g.find(v.name)) throw ParseError("duplicate vertex '" + v.name + "'", v.pos);
    g.addVertex(v.name, v.owner, label);
  }
  auto lookup = [&](const std::pair<std::string, std::size_t>& word) {
    const auto id = g.find(word.first);
    if (!id) throw ParseError("unknown vertex '" + word.first + "'", word.second);
    return *id;
  };
  for (const auto& [list, pos] : edges) {
    const VertexId from = lookup(list.front());
    for (std::size_t i = 1; i < list.size(); ++i) g.addEdge(from, lookup(list[i]));
  }
  if (initial) {
    g.setInitial(lookup(*initial));
  }
  g.validate();
  return g;
}

std::string writeGame(const GameGraph& g) {
  std::ostringstream os;
  os << "aps";
  for (const std::string& ap : g.aps()) os << ' ' << ap;
  os << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    os << "vertex " << g.name(v) << ' ' << static_cast<int>(g.owner(v)) << ' ' << '{';
    bool first = true;
    for (std::size_t i = 0; i < g.aps().size(); ++i) {
      if (!(g.label(v) >> i & 1)) continue;
      os << (first ? "" : ",") << g.aps()[i];
      first = false;
    }
    os << "}\n";
  }
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.successors(v).empty()) continue;
    os << "edge " << g.name(v);
    for (VertexId w : g.successors(v)) os << ' ' << g.name(w);
    os << '\n';
  }
  os << "initial " << g.name(g.initial()) << '\n';
  return os.str();
}

}  // namespace rltl
