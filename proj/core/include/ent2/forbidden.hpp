// Forbidden patterns for entanglement <= 2 on undirected graphs:
//   CS     no simple cycle longer than 4,
//   No-3C  every triangle has a vertex of degree 2,
//   No-AC  no square has two adjacent vertices of degree > 2.
// Every finder returns an explicit, re-validated witness.

#ifndef ENT2_FORBIDDEN_HPP
#define ENT2_FORBIDDEN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ent2/graph.hpp"

namespace ent2 {

struct LongCycle {
  std::vector<VertexId> cycle;
  friend bool operator==(const LongCycle&, const LongCycle&) = default;
};

struct Triangle3C {
  std::array<VertexId, 3> triangle{};
  friend bool operator==(const Triangle3C&, const Triangle3C&) = default;
};

/// `square` is a normalized 4-cycle; `pair` an adjacent pair on it whose
/// degrees both exceed 2, smaller id first.
struct SquareAC {
  std::array<VertexId, 4> square{};
  std::array<VertexId, 2> pair{};
  friend bool operator==(const SquareAC&, const SquareAC&) = default;
};

using Witness = std::variant<LongCycle, Triangle3C, SquareAC>;

struct ConditionVerdict {
  bool cs_ok = true;
  bool no3c_ok = true;
  bool noac_ok = true;
  std::optional<Witness> witness;  // the first failing condition's witness

  bool all_ok() const noexcept { return cs_ok && no3c_ok && noac_ok; }
};

/// Rotates a cycle to start at its smallest vertex and picks the direction
/// whose second vertex is smaller.
std::vector<VertexId> normalize_cycle(std::vector<VertexId> cycle);

/// A simple cycle with more than `k` vertices, or nullopt if none exists.
/// Back edges of a DFS with l(d,a) > k are reported first; otherwise each
/// biconnected block is checked against the shapes of circumference <= k.
/// Supports k <= 4 (std::invalid_argument otherwise).
std::optional<std::vector<VertexId>> find_long_cycle(const Graph& g, std::size_t k = 4);

std::optional<Triangle3C> find_3c_violation(const Graph& g);
std::optional<SquareAC> find_ac_violation(const Graph& g);

/// Runs CS, No-3C and No-AC in that order.
ConditionVerdict check_conditions(const Graph& g);

bool is_simple_cycle(const Graph& g, const std::vector<VertexId>& cycle);
bool is_valid_witness(const Graph& g, const Witness& w);

/// One-line rendering: "long-cycle: 0 1 2 3 4", "triangle-3c: 0 1 2",
/// "square-ac: 0 1 2 3 pair 0 1".
std::string describe(const Witness& w);

}  // namespace ent2

#endif  // ENT2_FORBIDDEN_HPP
