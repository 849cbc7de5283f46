#include "ent2/decider.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "ent2/forbidden.hpp"

namespace ent2 {

Superstructure superstructure(const Graph& g) {
  const Blocks blocks = biconnected_blocks(g);
  Superstructure s;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (blocks.is_articulation[v]) s.articulation.push_back(v);
  }
  s.components.reserve(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto verts = blocks.block_vertices(i);
    s.components.emplace_back(verts.begin(), verts.end());
    for (VertexId v : verts) {
      if (blocks.is_articulation[v]) s.forest_edges.emplace_back(v, i);
    }
  }
  return s;
}

namespace {

// Shared by the graph-wide and the block-local recognizers. `degree(i)` is
// the degree of component[i] in the whole graph (only asked for
// non-articulation vertices), `adjacent(x, y)` tests an edge inside the
// component, and `dead_ok(i, a, b)` tells whether component[i] has
// neighborhood exactly {a, b}.
template <class Degree, class Adjacent, class DeadOk>
MoleculeVerdict recognize(std::span<const VertexId> component,
                          const std::vector<bool>& is_articulation, Degree degree,
                          Adjacent adjacent, DeadOk dead_ok) {
  MoleculeVerdict out;
  std::size_t arts = 0;
  std::vector<VertexId> d;
  for (std::size_t i = 0; i < component.size(); ++i) {
    const VertexId x = component[i];
    if (is_articulation[x]) ++arts;
    if (is_articulation[x] || degree(i) != 2) d.push_back(x);
  }
  if (arts > 2) {
    out.reason = std::to_string(arts) + " articulation points";
    return out;
  }
  if (d.size() > 2) {
    out.reason = std::to_string(d.size()) + " vertices of degree other than 2 or articulation";
    return out;
  }

  Molecule& m = out.molecule;
  if (d.size() == 2) {
    m.a = d[0];
    m.b = d[1];
    for (std::size_t i = 0; i < component.size(); ++i) {
      const VertexId x = component[i];
      if (x == m.a || x == m.b) continue;
      if (!dead_ok(i, m.a, m.b)) {
        out.reason = "vertex " + std::to_string(x) + " is not adjacent to both " +
                     std::to_string(m.a) + " and " + std::to_string(m.b);
        return out;
      }
      m.deads.push_back(x);
    }
    m.eps = adjacent(m.a, m.b) ? 1 : 0;
    out.ok = true;
    return out;
  }

  switch (component.size()) {
    case 1:
      out.ok = out.unit = true;
      m.a = m.b = component[0];
      return out;
    case 2:
      m = {1, component[0], component[1], {}};
      out.ok = true;
      return out;
    case 3:
    case 4: {
      // A cycle; the glue pair must contain the articulation point if any.
      const VertexId x = d.empty() ? component[0] : d[0];
      VertexId other = kNoVertex;
      for (VertexId y : component) {
        if (y == x) continue;
        const bool adj = adjacent(x, y);
        if (component.size() == 3 ? adj : !adj) {
          other = y;
          break;
        }
      }
      m.a = std::min(x, other);
      m.b = std::max(x, other);
      m.eps = component.size() == 3 ? 1 : 0;
      for (VertexId y : component) {
        if (y != x && y != other) m.deads.push_back(y);
      }
      out.ok = true;
      return out;
    }
    default:
      out.reason = "component of size " + std::to_string(component.size()) +
                   " with fewer than two vertices of degree other than 2";
      return out;
  }
}

}  // namespace

MoleculeVerdict is_molecule(const Graph& g, std::span<const VertexId> component,
                            const std::vector<bool>& is_articulation) {
  return recognize(
      component, is_articulation, [&](std::size_t i) { return g.degree(component[i]); },
      [&](VertexId x, VertexId y) { return g.has_edge(x, y); },
      [&](std::size_t i, VertexId a, VertexId b) {
        auto nbrs = g.neighbors(component[i]);  // degree 2
        return (nbrs[0] == a && nbrs[1] == b) || (nbrs[0] == b && nbrs[1] == a);
      });
}

namespace {

// Same verdicts as is_molecule, computed from the block's own vertex and edge
// lists. A non-articulation vertex has all of its edges inside its block, so
// no lookups into the whole graph are needed; this keeps the pass sequential.
class BlockRecognizer {
 public:
  explicit BlockRecognizer(std::size_t n) : n_(n) {}

  MoleculeVerdict operator()(const Blocks& blocks, std::size_t block) {
    const auto verts = blocks.block_vertices(block);
    const auto edges = blocks.block_edges(block);
    const std::size_t k = verts.size();
    degree_.assign(k, 0);
    nb_.assign(k, {kNoVertex, kNoVertex});
    const bool small = k <= kSmall;
    if (!small) {
      if (index_.empty()) index_.resize(n_);
      for (std::size_t i = 0; i < k; ++i) index_[verts[i]] = static_cast<std::uint32_t>(i);
    }
    auto pos = [&](VertexId x) -> std::size_t {
      if (!small) return index_[x];
      return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    auto note = [&](std::size_t i, VertexId other) {
      if (degree_[i] < 2) nb_[i][degree_[i]] = other;
      ++degree_[i];
    };
    for (const Edge& e : edges) {
      note(pos(e.u), e.v);
      note(pos(e.v), e.u);
    }
    return recognize(
        verts, blocks.is_articulation, [&](std::size_t i) { return degree_[i]; },
        [&](VertexId x, VertexId y) {
          return std::binary_search(edges.begin(), edges.end(), Edge{std::min(x, y), std::max(x, y)});
        },
        [&](std::size_t i, VertexId a, VertexId b) {
          return (nb_[i][0] == a && nb_[i][1] == b) || (nb_[i][0] == b && nb_[i][1] == a);
        });
  }

 private:
  static constexpr std::size_t kSmall = 32;
  std::size_t n_;
  std::vector<std::size_t> degree_;
  std::vector<std::array<VertexId, 2>> nb_;
  std::vector<std::uint32_t> index_;  // vertex -> position, for large blocks only
};

std::string block_label(std::span<const VertexId> verts) {
  std::string s = "component {";
  const std::size_t shown = std::min<std::size_t>(verts.size(), 8);
  for (std::size_t i = 0; i < shown; ++i) s += (i ? " " : "") + std::to_string(verts[i]);
  if (shown < verts.size()) s += " ...";
  return s + "}";
}

// Folds molecules along the block-cut forest. Each tree is rooted at its
// smallest articulation point (or its single block); below an articulation
// point a, the subtree of every further block at a is collapsed onto the
// running expression at a.
class Folder {
 public:
  Folder(const Graph& g, const Blocks& blocks, const std::vector<Certificate::NodeId>& leaf,
         Certificate& cert)
      : blocks_(blocks), leaf_(leaf), cert_(cert) {
    const std::size_t n = g.vertex_count();
    const std::size_t nb = blocks.size();
    block_art_offsets_.assign(nb + 1, 0);
    art_block_offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < nb; ++i) {
      for (VertexId v : blocks.block_vertices(i)) {
        if (!blocks.is_articulation[v]) continue;
        block_arts_.push_back(v);
        ++art_block_offsets_[v + 1];
      }
      block_art_offsets_[i + 1] = block_arts_.size();
    }
    for (std::size_t v = 0; v < n; ++v) art_block_offsets_[v + 1] += art_block_offsets_[v];
    art_blocks_.resize(art_block_offsets_[n]);
    std::vector<std::size_t> fill(art_block_offsets_.begin(), art_block_offsets_.end() - 1);
    for (std::size_t i = 0; i < nb; ++i) {
      for (VertexId v : arts_of(i)) art_blocks_[fill[v]++] = static_cast<std::uint32_t>(i);
    }
  }

  void run() {
    const std::size_t nb = blocks_.size();
    std::vector<bool> seen(nb, false);
    std::vector<std::uint32_t> queue;
    for (std::size_t start = 0; start < nb; ++start) {
      if (seen[start]) continue;
      // Find the tree's smallest articulation point.
      VertexId root = kNoVertex;
      queue.assign(1, static_cast<std::uint32_t>(start));
      seen[start] = true;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        for (VertexId a : arts_of(queue[h])) {
          root = std::min(root, a);
          for (std::uint32_t b : blocks_of(a)) {
            if (!seen[b]) {
              seen[b] = true;
              queue.push_back(b);
            }
          }
        }
      }
      if (root == kNoVertex) {
        cert_.add_root(leaf_[start]);
        continue;
      }
      std::optional<Certificate::NodeId> acc;
      for (std::uint32_t b : blocks_of(root)) {
        const auto sub = fold(b, root);
        acc = acc ? cert_.add_collapse(root, *acc, sub) : sub;
      }
      cert_.add_root(*acc);
    }
  }

 private:
  std::span<const VertexId> arts_of(std::size_t block) const {
    return {block_arts_.data() + block_art_offsets_[block],
            block_art_offsets_[block + 1] - block_art_offsets_[block]};
  }
  std::span<const std::uint32_t> blocks_of(VertexId a) const {
    return {art_blocks_.data() + art_block_offsets_[a],
            art_block_offsets_[a + 1] - art_block_offsets_[a]};
  }

  Certificate::NodeId fold(std::uint32_t block, VertexId parent) {
    struct Frame {
      std::uint32_t block;
      VertexId parent;
      Certificate::NodeId expr;
      std::size_t ai = 0;
      std::size_t bi = 0;
    };
    std::vector<Frame> stack{{block, parent, leaf_[block]}};
    for (;;) {
      const std::size_t top = stack.size() - 1;
      bool descended = false;
      auto arts = arts_of(stack[top].block);
      while (stack[top].ai < arts.size()) {
        Frame& f = stack[top];
        const VertexId a = arts[f.ai];
        if (a == f.parent) {
          ++f.ai;
          continue;
        }
        auto list = blocks_of(a);
        while (f.bi < list.size() && list[f.bi] == f.block) ++f.bi;
        if (f.bi < list.size()) {
          const std::uint32_t child = list[f.bi++];
          stack.push_back({child, a, leaf_[child]});
          descended = true;
          break;
        }
        ++f.ai;
        f.bi = 0;
      }
      if (descended) continue;
      const Frame done = stack.back();
      stack.pop_back();
      if (stack.empty()) return done.expr;
      stack.back().expr = cert_.add_collapse(done.parent, stack.back().expr, done.expr);
    }
  }

  const Blocks& blocks_;
  const std::vector<Certificate::NodeId>& leaf_;
  Certificate& cert_;
  std::vector<std::size_t> block_art_offsets_;
  std::vector<VertexId> block_arts_;
  std::vector<std::size_t> art_block_offsets_;
  std::vector<std::uint32_t> art_blocks_;
};

}  // namespace

Decision decide_superstructure(const Graph& g, bool want_certificate) {
  Decision out;
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n > 0 && m >= 3 * n) {
    out.rejection = "edge bound: m = " + std::to_string(m) + " >= 3n = " + std::to_string(3 * n);
    return out;
  }

  const Blocks blocks = biconnected_blocks(g);
  Certificate cert;
  std::vector<Certificate::NodeId> leaf;
  if (want_certificate) {
    leaf.reserve(blocks.size());
    cert.reserve(2 * blocks.size(), n);
  }
  BlockRecognizer recognize_block(n);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    MoleculeVerdict v = recognize_block(blocks, i);
    if (!v.ok) {
      out.rejection = block_label(blocks.block_vertices(i)) + ": " + v.reason;
      return out;
    }
    if (want_certificate) {
      leaf.push_back(v.unit ? cert.add_unit(v.molecule.a) : cert.add_molecule(v.molecule));
    }
  }
  out.accepted = true;
  if (want_certificate) {
    Folder(g, blocks, leaf, cert).run();
    out.certificate = std::move(cert);
  }
  return out;
}

GlueFamily glue_family(const Graph& g, VertexId v) {
  GlueFamily f;
  for (VertexId x : g.neighbors(v)) {
    if (g.degree(x) != 2) continue;
    auto nx = g.neighbors(x);
    f.s2.push_back(nx[0] == v ? nx[1] : nx[0]);
  }
  std::sort(f.s2.begin(), f.s2.end());
  f.s2.erase(std::unique(f.s2.begin(), f.s2.end()), f.s2.end());
  for (VertexId x : g.neighbors(v)) {
    if (g.degree(x) != 2 && !std::binary_search(f.s2.begin(), f.s2.end(), x)) {
      f.sn2.push_back(x);
    }
  }
  for (VertexId x : f.sn2) {
    auto& sat = f.satellites.emplace_back();
    for (VertexId y : g.neighbors(x)) {
      if (y != v) sat.push_back(y);
    }
  }

  // The family is indexed: two satellites with equal contents still overlap.
  std::unordered_map<VertexId, int> seen;
  f.disjoint = true;
  auto count = [&](const std::vector<VertexId>& member) {
    for (VertexId y : member) {
      if (++seen[y] > 1) f.disjoint = false;
    }
  };
  count(f.s2);
  count(f.sn2);
  for (const auto& sat : f.satellites) count(sat);
  return f;
}

namespace {

enum class Mark : std::uint8_t { NotAffected, S2, Sn2, NearSn2 };

class GlueTraversal {
 public:
  explicit GlueTraversal(const Graph& g)
      : g_(g), visited_(g.vertex_count(), false), mark_(g.vertex_count(), Mark::NotAffected) {}

  // Explores the component of v0; false on rejection.
  bool visit_from(VertexId v0) {
    std::vector<VertexId> stack{v0};
    std::vector<VertexId> next;
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      if (visited_[v]) continue;
      visited_[v] = true;
      if (!next_glue_points(v, next)) {
        rejected_at_ = v;
        return false;
      }
      stack.insert(stack.end(), next.rbegin(), next.rend());
    }
    return true;
  }

  VertexId rejected_at() const { return rejected_at_; }

 private:
  bool next_glue_points(VertexId v, std::vector<VertexId>& out) {
    out.clear();
    auto nbrs = g_.neighbors(v);
    for (VertexId x : nbrs) mark_[x] = Mark::NotAffected;
    for (VertexId x : nbrs) {
      if (visited_[x] || g_.degree(x) != 2) continue;
      visited_[x] = true;
      for (VertexId y : g_.neighbors(x)) {
        if (y != v && mark_[y] == Mark::NotAffected) {
          mark_[y] = Mark::S2;
          out.push_back(y);
        }
      }
    }
    for (VertexId x : nbrs) {
      if (visited_[x] || g_.degree(x) == 2 || mark_[x] == Mark::S2) continue;
      if (mark_[x] != Mark::NotAffected) return false;
      mark_[x] = Mark::Sn2;
      for (VertexId y : g_.neighbors(x)) {
        if (visited_[y]) continue;
        if (mark_[y] != Mark::NotAffected) return false;
        mark_[y] = Mark::NearSn2;
      }
      out.push_back(x);
    }
    return true;
  }

  const Graph& g_;
  std::vector<bool> visited_;
  std::vector<Mark> mark_;
  VertexId rejected_at_ = kNoVertex;
};

}  // namespace

Decision decide_glue_traversal(const Graph& g) {
  Decision out;
  if (auto cycle = find_long_cycle(g, 4)) {
    out.rejection = describe(LongCycle{std::move(*cycle)});
    return out;
  }
  GlueTraversal t(g);
  for (const auto& comp : connected_components(g)) {
    auto start = std::find_if(comp.begin(), comp.end(),
                              [&](VertexId v) { return g.degree(v) != 2; });
    if (start == comp.end()) continue;
    if (!t.visit_from(*start)) {
      out.rejection = "overlapping glue family at " + std::to_string(t.rejected_at());
      return out;
    }
  }
  out.accepted = true;
  return out;
}

}  // namespace ent2
