#include "ent2/zeta2.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ent2 {
namespace {

Edge ordered(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

void sort_unique(std::vector<VertexId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

bool GlueGraph::is_glue(VertexId v) const {
  return std::binary_search(glue.begin(), glue.end(), v);
}

std::vector<Edge> Molecule::edges() const {
  std::vector<Edge> out;
  out.reserve(2 * deads.size() + 1);
  if (eps == 1) out.push_back(ordered(a, b));
  for (VertexId c : deads) {
    out.push_back(ordered(a, c));
    out.push_back(ordered(b, c));
  }
  return out;
}

Molecule canonical_molecule(int eps, std::size_t n) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("eps must be 0 or 1");
  Molecule m;
  m.eps = eps;
  m.a = 0;
  m.b = 1;
  m.deads.resize(n);
  std::iota(m.deads.begin(), m.deads.end(), VertexId{2});
  return m;
}

GlueGraph make_molecule(int eps, std::size_t n) {
  const Molecule m = canonical_molecule(eps, n);
  const auto edges = m.edges();
  return {build_graph(n + 2, edges), {0, 1}};
}

Collapsed collapse(const Graph& g1, VertexId a1, const Graph& g2, VertexId a2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  if (a1 >= n1 || a2 >= n2) throw std::out_of_range("collapse vertex out of range");

  Collapsed out;
  out.z = a1;
  out.from_left.resize(n1);
  std::iota(out.from_left.begin(), out.from_left.end(), VertexId{0});
  out.from_right.resize(n2);
  for (VertexId x = 0; x < n2; ++x) {
    out.from_right[x] =
        x == a2 ? a1 : static_cast<VertexId>(n1 + (x < a2 ? x : x - 1));
  }
  std::vector<Edge> edges = g1.edges();
  for (const Edge& e : g2.edges()) {
    edges.push_back(ordered(out.from_right[e.u], out.from_right[e.v]));
  }
  out.result.graph = build_graph(n1 + n2 - 1, edges);
  return out;
}

Collapsed legal_collapse(const GlueGraph& g1, VertexId a, const GlueGraph& g2, VertexId b) {
  if (!g1.is_glue(a)) {
    throw std::invalid_argument("illegal collapse: " + std::to_string(a) +
                                " is not a glue point of the left operand");
  }
  if (!g2.is_glue(b)) {
    throw std::invalid_argument("illegal collapse: " + std::to_string(b) +
                                " is not a glue point of the right operand");
  }
  Collapsed out = collapse(g1.graph, a, g2.graph, b);
  out.result.glue = g1.glue;
  for (VertexId x : g2.glue) out.result.glue.push_back(out.from_right[x]);
  sort_unique(out.result.glue);
  return out;
}

DerivedGraph derived_graph(const GlueGraph& g) {
  const std::size_t n = g.graph.vertex_count();
  DerivedGraph out;
  out.glue = g.glue;
  std::vector<VertexId> index(n, kNoVertex);
  for (std::size_t i = 0; i < out.glue.size(); ++i) index[out.glue[i]] = static_cast<VertexId>(i);

  std::vector<Edge> edges;
  std::vector<VertexId> glue_nbrs;
  for (VertexId x = 0; x < n; ++x) {
    auto nbrs = g.graph.neighbors(x);
    if (index[x] != kNoVertex) {
      for (VertexId y : nbrs) {
        if (x < y && index[y] != kNoVertex) edges.push_back({index[x], index[y]});
      }
      continue;
    }
    glue_nbrs.clear();
    for (VertexId y : nbrs) {
      if (index[y] != kNoVertex) glue_nbrs.push_back(index[y]);
    }
    out.non_glue.push_back({x, nbrs.size(), glue_nbrs.size() == nbrs.size()});
    for (std::size_t i = 0; i < glue_nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < glue_nbrs.size(); ++j) {
        edges.push_back(ordered(glue_nbrs[i], glue_nbrs[j]));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = build_graph(out.glue.size(), edges);
  return out;
}

Zeta2Check is_zeta2_glue(const GlueGraph& g) {
  const std::size_t n = g.graph.vertex_count();
  if (!std::is_sorted(g.glue.begin(), g.glue.end()) ||
      std::adjacent_find(g.glue.begin(), g.glue.end()) != g.glue.end()) {
    return {false, "glue set is not sorted and unique"};
  }
  if (!g.glue.empty() && g.glue.back() >= n) return {false, "glue point out of range"};

  for (VertexId x = 0; x < n; ++x) {
    if (g.is_glue(x)) continue;
    auto nbrs = g.graph.neighbors(x);
    if (nbrs.size() != 2) {
      return {false, "non-glue vertex " + std::to_string(x) + " has " +
                         std::to_string(nbrs.size()) + " neighbors"};
    }
    for (VertexId y : nbrs) {
      if (!g.is_glue(y)) {
        return {false, "non-glue vertex " + std::to_string(x) + " has non-glue neighbor " +
                           std::to_string(y)};
      }
    }
  }

  const DerivedGraph d = derived_graph(g);
  std::vector<VertexId> parent(d.glue.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : d.graph.edges()) {
    const VertexId ru = find(e.u), rv = find(e.v);
    if (ru == rv) {
      return {false, "derived graph has a cycle through " + std::to_string(d.glue[e.u]) +
                         " and " + std::to_string(d.glue[e.v])};
    }
    parent[ru] = rv;
  }
  return {true, {}};
}

Certificate::NodeId Certificate::add_unit(VertexId v) {
  Node node;
  node.kind = Kind::Unit;
  node.vertex = v;
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

Certificate::NodeId Certificate::add_molecule(int eps, VertexId a, VertexId b,
                                              std::span<const VertexId> deads) {
  Node node;
  node.kind = Kind::Molecule;
  node.eps = static_cast<std::uint8_t>(eps);
  node.vertex = a;
  node.b = b;
  node.dead_begin = static_cast<std::uint32_t>(deads_.size());
  node.dead_count = static_cast<std::uint32_t>(deads.size());
  deads_.insert(deads_.end(), deads.begin(), deads.end());
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

Certificate::NodeId Certificate::add_molecule(const Molecule& m) {
  return add_molecule(m.eps, m.a, m.b, m.deads);
}

Certificate::NodeId Certificate::add_collapse(VertexId z, NodeId left, NodeId right) {
  if (left >= nodes_.size() || right >= nodes_.size() || left == right) {
    throw CertificateError("collapse operands must be two distinct existing nodes");
  }
  Node node;
  node.kind = Kind::Collapse;
  node.vertex = z;
  node.left = left;
  node.right = right;
  nodes_.push_back(node);
  return static_cast<NodeId>(nodes_.size() - 1);
}

void Certificate::add_root(NodeId id) {
  if (id >= nodes_.size()) throw CertificateError("root is not an existing node");
  roots_.push_back(id);
}

Molecule Certificate::molecule(NodeId id) const {
  const Node& n = node(id);
  if (n.kind != Kind::Molecule) throw CertificateError("node is not a molecule");
  auto d = deads(n);
  return {n.eps, n.vertex, n.b, {d.begin(), d.end()}};
}

void Certificate::relabel(std::span<const VertexId> map) {
  auto at = [&](VertexId v) {
    if (v >= map.size()) throw std::out_of_range("relabel map does not cover vertex");
    return map[v];
  };
  for (Node& n : nodes_) {
    n.vertex = at(n.vertex);
    if (n.kind == Kind::Molecule) n.b = at(n.b);
  }
  for (VertexId& d : deads_) d = at(d);
}

void Certificate::reserve(std::size_t nodes, std::size_t deads) {
  nodes_.reserve(nodes);
  deads_.reserve(deads);
}

GlueGraph EvaluatedCertificate::as_glue_graph() const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] != i) throw CertificateError("certificate vertex ids are not 0..n-1");
  }
  return {build_graph(vertices.size(), edges), glue};
}

// Each node owns a vertex -> is-glue map; a collapse moves the smaller child
// map into the larger one, so the total work is O(n log n).
EvaluatedCertificate evaluate_certificate(const Certificate& c) {
  using Kind = Certificate::Kind;
  using Map = std::unordered_map<VertexId, bool>;
  const std::size_t size = c.size();

  std::vector<std::uint8_t> uses(size, 0);
  for (Certificate::NodeId r : c.roots()) ++uses[r];
  for (std::size_t i = size; i-- > 0;) {
    if (uses[i] == 0) continue;
    if (uses[i] > 1) throw CertificateError("node " + std::to_string(i) + " is used twice");
    const auto& n = c.node(static_cast<Certificate::NodeId>(i));
    if (n.kind == Kind::Collapse) {
      ++uses[n.left];
      ++uses[n.right];
    }
  }

  EvaluatedCertificate out;
  std::vector<Map> maps(size);
  auto absorb = [](Map& big, Map& small, VertexId z, const std::string& where) {
    for (const auto& [v, glue] : small) {
      if (v == z) continue;
      if (!big.emplace(v, glue).second) {
        throw CertificateError(where + ": operands share vertex " + std::to_string(v));
      }
    }
    Map().swap(small);
  };

  for (std::size_t i = 0; i < size; ++i) {
    if (uses[i] == 0) continue;
    const auto& n = c.node(static_cast<Certificate::NodeId>(i));
    Map& m = maps[i];
    if (n.kind == Kind::Unit) {
      m.emplace(n.vertex, true);
    } else if (n.kind == Kind::Molecule) {
      const std::string where = "molecule at " + std::to_string(n.vertex);
      if (n.eps > 1) throw CertificateError(where + ": eps must be 0 or 1");
      m.emplace(n.vertex, true);
      if (!m.emplace(n.b, true).second) throw CertificateError(where + ": a == b");
      for (VertexId d : c.deads(n)) {
        if (!m.emplace(d, false).second) {
          throw CertificateError(where + ": repeated vertex " + std::to_string(d));
        }
      }
      if (n.eps == 1) out.edges.push_back(ordered(n.vertex, n.b));
      for (VertexId d : c.deads(n)) {
        out.edges.push_back(ordered(n.vertex, d));
        out.edges.push_back(ordered(n.b, d));
      }
    } else {
      const VertexId z = n.vertex;
      const std::string where = "collapse at " + std::to_string(z);
      Map& l = maps[n.left];
      Map& r = maps[n.right];
      auto lz = l.find(z);
      auto rz = r.find(z);
      if (lz == l.end() || !lz->second) {
        throw CertificateError(where + ": not a glue point of the left operand");
      }
      if (rz == r.end() || !rz->second) {
        throw CertificateError(where + ": not a glue point of the right operand");
      }
      Map& big = l.size() >= r.size() ? l : r;
      Map& small = l.size() >= r.size() ? r : l;
      absorb(big, small, z, where);
      m.swap(big);
    }
  }

  Map all;
  for (Certificate::NodeId r : c.roots()) {
    Map& m = maps[r];
    if (all.size() < m.size()) all.swap(m);
    absorb(all, m, kNoVertex, "roots");
  }
  out.vertices.reserve(all.size());
  for (const auto& [v, glue] : all) {
    out.vertices.push_back(v);
    if (glue) out.glue.push_back(v);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.glue.begin(), out.glue.end());
  std::sort(out.edges.begin(), out.edges.end());
  if (std::adjacent_find(out.edges.begin(), out.edges.end()) != out.edges.end()) {
    throw CertificateError("certificate repeats an edge");
  }
  return out;
}

Verification verify_certificate(const Certificate& c, const Graph& g) {
  EvaluatedCertificate e;
  try {
    e = evaluate_certificate(c);
  } catch (const CertificateError& err) {
    return {false, err.what()};
  }
  if (e.vertices.size() != g.vertex_count()) return {false, "vertex-set mismatch"};
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    if (e.vertices[i] != i) return {false, "vertex-set mismatch"};
  }
  if (e.edges != g.edges()) return {false, "edge-set mismatch"};
  return {true, {}};
}

}  // namespace ent2
