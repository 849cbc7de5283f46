// Linear-time deciders for entanglement <= 2 on undirected graphs.
//
// decide_superstructure checks every biconnected block against the molecule
// shapes and, on success, folds the molecules into a certificate along the
// block-cut forest. decide_glue_traversal walks glue points directly after a
// long-cycle test and returns only a verdict.

#ifndef ENT2_DECIDER_HPP
#define ENT2_DECIDER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ent2/graph.hpp"
#include "ent2/zeta2.hpp"

namespace ent2 {

/// Block-cut forest: articulation points, biconnected components (sorted
/// vertex sets, ordered by smallest edge), and (articulation, component)
/// incidences.
struct Superstructure {
  std::vector<VertexId> articulation;
  std::vector<std::vector<VertexId>> components;
  std::vector<std::pair<VertexId, std::size_t>> forest_edges;
};

Superstructure superstructure(const Graph& g);

struct MoleculeVerdict {
  bool ok = false;
  bool unit = false;  // singleton component, denoted by eta
  Molecule molecule;  // glue points a < b; valid when ok && !unit
  std::string reason;
};

/// Recognizes a biconnected component (with its articulation points) as a
/// molecule. Degrees are taken in the whole graph.
MoleculeVerdict is_molecule(const Graph& g, std::span<const VertexId> component,
                            const std::vector<bool>& is_articulation);

struct Decision {
  bool accepted = false;
  std::optional<Certificate> certificate;
  std::string rejection;  // empty when accepted
};

/// With `want_certificate` false only the verdict is computed.
Decision decide_superstructure(const Graph& g, bool want_certificate = true);

struct GlueFamily {
  std::vector<VertexId> s2;   // sorted
  std::vector<VertexId> sn2;  // sorted
  std::vector<std::vector<VertexId>> satellites;  // satellites[i] = N(sn2[i]) minus v
  bool disjoint = false;  // members of {S2, Sn2, satellites...} pairwise disjoint
};

GlueFamily glue_family(const Graph& g, VertexId v);

Decision decide_glue_traversal(const Graph& g);

}  // namespace ent2

#endif  // ENT2_DECIDER_HPP
