#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rltl/lasso.hpp"

namespace rltl {

using VertexId = std::uint32_t;

enum class Player : std::uint8_t { Zero = 0, One = 1 };

inline Player opponent(Player p) noexcept { return p == Player::Zero ? Player::One : Player::Zero; }
const char* playerName(Player p);

/// Labeled two-player game graph. Vertex labels are letters over `aps()`.
class GameGraph {
public:
  explicit GameGraph(std::vector<std::string> aps = {});

  const std::vector<std::string>& aps() const noexcept { return aps_; }

  VertexId addVertex(std::string name, Player owner, Letter label);
  void addEdge(VertexId from, VertexId to);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  Player owner(VertexId v) const { return owners_.at(v); }
  Letter label(VertexId v) const { return labels_.at(v); }
  const std::vector<VertexId>& successors(VertexId v) const { return successors_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;

  VertexId initial() const noexcept { return initial_; }
  void setInitial(VertexId v);

  /// Throws Error on an empty graph or a vertex without successors.
  void validate() const;

  /// The word λ(v_0) λ(v_1) ... of a play given as prefix and cycle of
  /// vertices, over the graph's AP list.
  LassoWord trace(const std::vector<VertexId>& prefix, const std::vector<VertexId>& cycle) const;

private:
  std::vector<std::string> aps_;
  std::vector<std::string> names_;
  std::vector<Player> owners_;
  std::vector<Letter> labels_;
  std::vector<std::vector<VertexId>> successors_;
  VertexId initial_ = 0;
};

/// Line-based game format:
///
///     aps p q               (optional; defaults to every atom in a label)
///     vertex v0 0 {p}       (name, owner 0 or 1, label set)
///     edge v0 v1 v2         (edges v0->v1 and v0->v2)
///     initial v0            (optional; defaults to the first vertex)
///
/// `#` starts a comment. Throws ParseError (offset into `text`) or Error when
/// the result is not a valid game.
GameGraph parseGame(std::string_view text);
std::string writeGame(const GameGraph& g);

}  // namespace rltl
