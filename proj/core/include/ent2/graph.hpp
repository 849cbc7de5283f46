// Simple undirected graphs, directed graphs, and the DFS primitives every
// other module is built on: trees with back edges and biconnected blocks.

#ifndef ENT2_GRAPH_HPP
#define ENT2_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ent2 {

using VertexId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Raised by graph constructors on malformed input. `edge()` is the offending
/// pair as given by the caller.
class GraphError : public std::invalid_argument {
 public:
  GraphError(const std::string& what, Edge edge)
      : std::invalid_argument(what), edge_(edge) {}
  Edge edge() const noexcept { return edge_; }

 private:
  Edge edge_;
};

/// Immutable simple undirected graph in compressed adjacency form.
/// Vertex ids are dense in [0, n); every adjacency list is sorted.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  /// Every edge once, as (min, max), in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t n, std::span<const Edge> edges);
  friend struct Blocks biconnected_blocks(const Graph& g);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

/// Rejects out-of-range ids, self-loops and duplicate edges with GraphError.
Graph build_graph(std::size_t n, std::span<const Edge> edges);
inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::size_t degree(const Graph& g, VertexId v);

/// Directed graph; self-loops are allowed, repeated arcs are not.
class DiGraph {
 public:
  DiGraph() = default;

  static DiGraph from_arcs(std::size_t n, std::span<const Edge> arcs);
  /// Each undirected edge {u,v} becomes the arcs (u,v) and (v,u).
  static DiGraph symmetrize(const Graph& g);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return succ_.size(); }
  std::span<const VertexId> successors(VertexId v) const;
  bool has_arc(VertexId u, VertexId v) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> succ_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> to_original;    // new id -> old id
  std::vector<VertexId> from_original;  // old id -> new id, kNoVertex if dropped
};

/// New ids follow ascending original id. Duplicates in `vertices` are ignored.
InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices);

/// Sorted vertex sets, ordered by smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

struct BackEdge {
  VertexId descendant = 0;
  VertexId ancestor = 0;

  friend bool operator==(const BackEdge&, const BackEdge&) = default;
};

/// Tree with back edges produced by a depth-first search.
///
/// `depth[v]` counts tree edges from the root of v's tree. Vertices not
/// reached have `parent == kNoVertex` and `depth == kUnreached`. Each
/// non-tree edge is stored once, oriented from the deeper endpoint to its
/// tree ancestor.
struct TwBE {
  static constexpr std::uint32_t kUnreached =
      std::numeric_limits<std::uint32_t>::max();

  VertexId root = kNoVertex;
  std::vector<VertexId> parent;
  std::vector<std::uint32_t> depth;
  std::vector<BackEdge> back_edges;
  std::vector<VertexId> order;  // discovery order

  bool reached(VertexId v) const { return depth[v] != kUnreached; }

  /// Number of vertices on the cycle closed by the back edge:
  /// depth(d) - depth(a) + 1.
  std::size_t cycle_length(const BackEdge& e) const {
    return static_cast<std::size_t>(depth[e.descendant] - depth[e.ancestor]) + 1;
  }

  /// Tree path from `ancestor` down to `descendant`, both included.
  std::vector<VertexId> tree_path(VertexId ancestor, VertexId descendant) const;
};

/// DFS from `root` visiting neighbors in ascending order. Only root's
/// connected component is explored.
TwBE dfs_twbe(const Graph& g, VertexId root);

/// DFS forest over all components; roots are taken in ascending id order and
/// `root` holds the first one. Every vertex is reached.
TwBE dfs_forest(const Graph& g);

/// Articulation points and biconnected blocks (bridges are two-vertex blocks,
/// isolated vertices are one-vertex blocks). Blocks are ordered by their
/// smallest edge; an isolated vertex v sorts as the pair (v, v).
struct Blocks {
  std::vector<bool> is_articulation;
  std::vector<std::size_t> vertex_offsets{0};
  std::vector<VertexId> vertices;  // sorted within each block
  std::vector<std::size_t> edge_offsets{0};
  std::vector<Edge> edges;  // (min, max), sorted within each block

  std::size_t size() const noexcept { return vertex_offsets.size() - 1; }
  std::span<const VertexId> block_vertices(std::size_t i) const {
    return {vertices.data() + vertex_offsets[i],
            vertex_offsets[i + 1] - vertex_offsets[i]};
  }
  std::span<const Edge> block_edges(std::size_t i) const {
    return {edges.data() + edge_offsets[i], edge_offsets[i + 1] - edge_offsets[i]};
  }
};

Blocks biconnected_blocks(const Graph& g);

}  // namespace ent2

#endif  // ENT2_GRAPH_HPP
