// Molecules, collapses and glue graphs, the derived graph, and certificates:
// expression trees of molecules joined by legal collapses.

#ifndef ENT2_ZETA2_HPP
#define ENT2_ZETA2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ent2/graph.hpp"

namespace ent2 {

/// A graph together with its glue points (sorted, unique).
struct GlueGraph {
  Graph graph;
  std::vector<VertexId> glue;

  bool is_glue(VertexId v) const;
  friend bool operator==(const GlueGraph&, const GlueGraph&) = default;
};

/// theta^{eps,n}_{a,b} on concrete ids: every dead point is adjacent to both
/// a and b, and a-b is an edge iff eps == 1.
struct Molecule {
  int eps = 1;
  VertexId a = 0;
  VertexId b = 1;
  std::vector<VertexId> deads;

  std::vector<Edge> edges() const;
  friend bool operator==(const Molecule&, const Molecule&) = default;
};

/// theta^{eps,n} with a = 0, b = 1 and dead points 2 .. n+1.
GlueGraph make_molecule(int eps, std::size_t n);
Molecule canonical_molecule(int eps, std::size_t n);

/// Result of (legal) collapse. Ids of the left operand are kept and the merged
/// vertex takes the left id; the other right vertices follow in order.
struct Collapsed {
  GlueGraph result;  // glue is empty for a plain collapse
  VertexId z = 0;
  std::vector<VertexId> from_left;
  std::vector<VertexId> from_right;
};

Collapsed collapse(const Graph& g1, VertexId a1, const Graph& g2, VertexId a2);

/// std::invalid_argument unless a is glue in g1 and b is glue in g2.
Collapsed legal_collapse(const GlueGraph& g1, VertexId a, const GlueGraph& g2, VertexId b);

/// Graph on the glue points (index i stands for glue[i]): two glue points are
/// joined when adjacent or when they share a non-glue neighbor.
struct DerivedGraph {
  Graph graph;
  std::vector<VertexId> glue;

  struct NonGlue {
    VertexId vertex = 0;
    std::size_t neighbor_count = 0;
    bool all_glue_neighbors = false;
  };
  std::vector<NonGlue> non_glue;
};

DerivedGraph derived_graph(const GlueGraph& g);

struct Zeta2Check {
  bool member = false;
  std::string reason;  // empty when member
};

Zeta2Check is_zeta2_glue(const GlueGraph& g);

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression forest in an arena: children are always created before their
/// parent, so a forward scan is a bottom-up traversal. Each root denotes one
/// connected piece; a disconnected graph has one root per component.
class Certificate {
 public:
  using NodeId = std::uint32_t;
  enum class Kind : std::uint8_t { Unit, Molecule, Collapse };

  struct Node {
    Kind kind = Kind::Unit;
    std::uint8_t eps = 0;
    VertexId vertex = 0;  // unit vertex, molecule a, or collapse point z
    VertexId b = 0;
    std::uint32_t dead_begin = 0;
    std::uint32_t dead_count = 0;
    NodeId left = 0;
    NodeId right = 0;
  };

  NodeId add_unit(VertexId v);
  NodeId add_molecule(const Molecule& m);
  NodeId add_molecule(int eps, VertexId a, VertexId b, std::span<const VertexId> deads);
  NodeId add_collapse(VertexId z, NodeId left, NodeId right);
  void add_root(NodeId id);

  std::size_t size() const noexcept { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::span<const VertexId> deads(const Node& n) const {
    return {deads_.data() + n.dead_begin, n.dead_count};
  }
  Molecule molecule(NodeId id) const;
  const std::vector<NodeId>& roots() const noexcept { return roots_; }

  /// Applies `map` to every vertex id in the certificate.
  void relabel(std::span<const VertexId> map);

  void reserve(std::size_t nodes, std::size_t deads);

 private:
  std::vector<Node> nodes_;
  std::vector<VertexId> deads_;
  std::vector<NodeId> roots_;
};

/// Denoted glue graph on the ids the certificate uses (not necessarily
/// dense). Vertices, edges and glue are sorted.
struct EvaluatedCertificate {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  std::vector<VertexId> glue;

  /// Requires vertices == {0..n-1}; CertificateError otherwise.
  GlueGraph as_glue_graph() const;
};

/// Bottom-up legal-collapse evaluation. CertificateError on an illegal
/// collapse, children sharing a vertex other than z, malformed molecules, or
/// roots that overlap.
EvaluatedCertificate evaluate_certificate(const Certificate& c);

struct Verification {
  bool ok = false;
  std::string reason;  // "vertex-set mismatch", "edge-set mismatch", or an evaluation error
};

Verification verify_certificate(const Certificate& c, const Graph& g);

// Text form, one expression per root:
//   (eta v) | (theta eps n a b [c1 ... cn]) | (collapse z E1 E2)
std::string format_certificate(const Certificate& c);
/// ParseError (graph_io.hpp) with the line number on malformed input.
Certificate parse_certificate(std::string_view text);

}  // namespace ent2

#endif  // ENT2_ZETA2_HPP
