// Exact solver for the cops-and-thief entanglement game.
//
// Positions are (thief vertex, cop set, player to move). Cops may skip, put a
// new cop on the thief's vertex, or move a placed cop there; the thief must
// then leave along an arc to a vertex without a cop. A thief with no such arc
// is caught. Plays that never end are won by the thief, so the cops' winning
// region is the least fixpoint of their attractor to the caught positions.

#ifndef ENT2_GAME_HPP
#define ENT2_GAME_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ent2/graph.hpp"

namespace ent2 {

enum class Player : std::uint8_t { Cops, Thief };

/// Cop sets are bitmasks over vertex ids, so games are limited to 63 vertices.
using CopSet = std::uint64_t;

struct GamePosition {
  VertexId thief = 0;
  CopSet cops = 0;
  Player turn = Player::Cops;
};

class GameResult {
 public:
  std::size_t cop_budget() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return n_; }

  /// True iff cops win from (v, {}, Cops) for every starting vertex v.
  bool cops_win_game() const noexcept { return cops_win_game_; }

  /// Winner of a position; `p.cops` must have at most k members.
  Player winner(const GamePosition& p) const;

  /// Positions in the game graph (both players).
  std::size_t position_count() const noexcept { return 2 * n_ * sets_; }

 private:
  friend GameResult solve_game(const DiGraph& g, std::size_t k);

  std::size_t index(VertexId v, CopSet cops) const;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::size_t sets_ = 0;  // cop sets of size <= k
  bool cops_win_game_ = false;
  std::vector<std::size_t> size_offset_;            // first rank of each set size
  std::vector<std::vector<std::size_t>> binom_;     // binom_[a][b] = C(a, b)
  std::vector<bool> cops_turn_won_;
  std::vector<bool> thief_turn_won_;
};

/// Throws std::invalid_argument when k > n, n > 63, or the game graph would
/// exceed 2^31 positions.
GameResult solve_game(const DiGraph& g, std::size_t k);

/// Least k with a cops' win, scanning upward. Returns nullopt when `max_k` is
/// reached first. Throws std::logic_error if cops win at k but not at k + 1.
std::optional<std::size_t> entanglement(const DiGraph& g,
                                        std::optional<std::size_t> max_k = std::nullopt);
std::size_t entanglement(const Graph& g);

/// Undirected entanglement <= 2 decided directly by the game.
bool game_entanglement_at_most(const Graph& g, std::size_t k);

struct StarCheck {
  enum class Witness { None, Path, Cycle };

  bool ok = true;
  Witness kind = Witness::None;
  std::vector<VertexId> witness;  // path of 3 edges, or a simple cycle
};

/// Ent(G) <= 1 for undirected G: every component is a star.
StarCheck entanglement_leq1_undirected(const Graph& g);

bool is_acyclic(const DiGraph& g);

/// Ent(G) <= 1 for directed G: each strongly connected component becomes
/// acyclic after deleting one of its vertices.
bool entanglement_leq1_directed(const DiGraph& g);

/// Strongly connected components (Tarjan), each sorted, ordered by smallest
/// member.
std::vector<std::vector<VertexId>> strongly_connected_components(const DiGraph& g);

}  // namespace ent2

#endif  // ENT2_GAME_HPP
