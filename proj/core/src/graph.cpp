#include "ent2/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace ent2 {
namespace {

std::string pair_text(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Counting-sort the arcs into CSR form. Lists come out sorted.
void fill_csr(std::size_t n, std::span<const Edge> arcs, bool both_directions,
              std::vector<std::size_t>& offsets, std::vector<VertexId>& out) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : arcs) {
    ++offsets[e.u + 1];
    if (both_directions) ++offsets[e.v + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  out.assign(offsets.back(), 0);
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : arcs) {
    out[cursor[e.u]++] = e.v;
    if (both_directions) out[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              out.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]));
  }
}

}  // namespace

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  // Search the shorter list.
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoVertex) throw std::invalid_argument("too many vertices");
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge " + pair_text(e) + " has an endpoint outside [0," +
                           std::to_string(n) + ")",
                       e);
    }
    if (e.u == e.v) throw GraphError("self-loop " + pair_text(e), e);
  }
  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  fill_csr(n, edges, true, g.offsets_, g.adjacency_);
  for (VertexId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      // Report the pair the way the caller wrote it.
      Edge key{std::min(v, *dup), std::max(v, *dup)};
      Edge offending = key;
      for (const Edge& e : edges) {
        if (Edge{std::min(e.u, e.v), std::max(e.u, e.v)} == key) offending = e;
      }
      throw GraphError("duplicate edge " + pair_text(offending), offending);
    }
  }
  return g;
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

DiGraph DiGraph::from_arcs(std::size_t n, std::span<const Edge> arcs) {
  if (n >= kNoVertex) throw std::invalid_argument("too many vertices");
  for (const Edge& e : arcs) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("arc " + pair_text(e) + " has an endpoint outside [0," +
                           std::to_string(n) + ")",
                       e);
    }
  }
  DiGraph d;
  d.n_ = n;
  fill_csr(n, arcs, false, d.offsets_, d.succ_);
  for (VertexId v = 0; v < n; ++v) {
    auto s = d.successors(v);
    auto dup = std::adjacent_find(s.begin(), s.end());
    if (dup != s.end()) {
      Edge e{v, *dup};
      throw GraphError("duplicate arc " + pair_text(e), e);
    }
  }
  return d;
}

DiGraph DiGraph::symmetrize(const Graph& g) {
  DiGraph d;
  d.n_ = g.vertex_count();
  d.offsets_.assign(d.n_ + 1, 0);
  for (VertexId v = 0; v < d.n_; ++v) d.offsets_[v + 1] = d.offsets_[v] + g.degree(v);
  d.succ_.reserve(d.offsets_.back());
  for (VertexId v = 0; v < d.n_; ++v) {
    auto nb = g.neighbors(v);
    d.succ_.insert(d.succ_.end(), nb.begin(), nb.end());
  }
  return d;
}

std::span<const VertexId> DiGraph::successors(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return {succ_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool DiGraph::has_arc(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  auto s = successors(u);
  return std::binary_search(s.begin(), s.end(), v);
}

InducedSubgraph induced_subgraph(const Graph& g,
                                 std::span<const VertexId> vertices) {
  InducedSubgraph out;
  out.from_original.assign(g.vertex_count(), kNoVertex);
  for (VertexId v : vertices) {
    if (v >= g.vertex_count()) {
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    }
    out.from_original[v] = 0;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (out.from_original[v] != kNoVertex) {
      out.from_original[v] = static_cast<VertexId>(out.to_original.size());
      out.to_original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (VertexId nu = 0; nu < out.to_original.size(); ++nu) {
    for (VertexId w : g.neighbors(out.to_original[nu])) {
      VertexId nw = out.from_original[w];
      if (nw != kNoVertex && nu < nw) edges.push_back({nu, nw});
    }
  }
  out.graph = build_graph(out.to_original.size(), edges);
  return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexId> TwBE::tree_path(VertexId ancestor,
                                      VertexId descendant) const {
  std::vector<VertexId> path;
  for (VertexId v = descendant;; v = parent[v]) {
    if (v == kNoVertex) throw std::invalid_argument("not a tree ancestor");
    path.push_back(v);
    if (v == ancestor) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// Iterative DFS from `root` into the shared arrays of `t`.
void dfs_from(const Graph& g, VertexId root, TwBE& t) {
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack;
  t.depth[root] = 0;
  t.order.push_back(root);
  stack.push_back({root, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = g.neighbors(f.v);
    if (f.next == nb.size()) {
      stack.pop_back();
      continue;
    }
    const VertexId v = f.v;
    const VertexId w = nb[f.next++];
    if (!t.reached(w)) {
      t.parent[w] = v;
      t.depth[w] = t.depth[v] + 1;
      t.order.push_back(w);
      stack.push_back({w, 0});
    } else if (w != t.parent[v] && t.depth[w] < t.depth[v]) {
      t.back_edges.push_back({v, w});
    }
  }
}

TwBE empty_twbe(std::size_t n) {
  TwBE t;
  t.parent.assign(n, kNoVertex);
  t.depth.assign(n, TwBE::kUnreached);
  t.order.reserve(n);
  return t;
}

}  // namespace

TwBE dfs_twbe(const Graph& g, VertexId root) {
  if (root >= g.vertex_count()) {
    throw std::out_of_range("root " + std::to_string(root) + " out of range");
  }
  TwBE t = empty_twbe(g.vertex_count());
  t.root = root;
  dfs_from(g, root, t);
  return t;
}

TwBE dfs_forest(const Graph& g) {
  TwBE t = empty_twbe(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (t.reached(v)) continue;
    if (t.root == kNoVertex) t.root = v;
    dfs_from(g, v, t);
  }
  return t;
}

Blocks biconnected_blocks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kUndiscovered = std::numeric_limits<std::uint32_t>::max();
  // Per-vertex DFS state packed together; on large random labelings each
  // visit then costs one cache miss instead of one per array.
  struct State {
    std::uint32_t disc = kUndiscovered;
    std::uint32_t low = 0;
    VertexId parent = kNoVertex;
    std::uint32_t stamp = 0;
  };
  std::vector<State> st(n);
  std::vector<Edge> edge_stack;
  std::uint32_t clock = 0;
  std::uint32_t block_stamp = 0;

  // Collected unsorted; reordered at the end.
  struct Raw {
    Edge key;
    std::size_t vbegin, vend, ebegin, eend;
  };
  std::vector<Raw> raw;
  std::vector<VertexId> vbuf;
  std::vector<Edge> ebuf;
  vbuf.reserve(n + g.edge_count());
  ebuf.reserve(g.edge_count());

  Blocks out;
  out.is_articulation.assign(n, false);

  auto close_block = [&](Edge until) {
    ++block_stamp;
    Raw r{{kNoVertex, kNoVertex}, vbuf.size(), 0, ebuf.size(), 0};
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      ebuf.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
      for (VertexId x : {e.u, e.v}) {
        if (st[x].stamp != block_stamp) {
          st[x].stamp = block_stamp;
          vbuf.push_back(x);
        }
      }
      if (e == until) break;
    }
    r.vend = vbuf.size();
    r.eend = ebuf.size();
    std::sort(vbuf.begin() + static_cast<std::ptrdiff_t>(r.vbegin), vbuf.end());
    std::sort(ebuf.begin() + static_cast<std::ptrdiff_t>(r.ebegin), ebuf.end());
    r.key = ebuf[r.ebegin];
    raw.push_back(r);
  };

  struct Frame {
    VertexId v;
    std::uint32_t next;
    std::span<const VertexId> nb;
  };
  std::vector<Frame> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (st[root].disc != kUndiscovered) continue;
    st[root].disc = st[root].low = clock++;
    if (g.degree(root) == 0) {
      raw.push_back({{root, root}, vbuf.size(), vbuf.size() + 1, ebuf.size(), ebuf.size()});
      vbuf.push_back(root);
      continue;
    }
    std::size_t root_children = 0;
    stack.push_back({root, 0, g.neighbors(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const VertexId v = f.v;
      if (f.next < f.nb.size()) {
        const VertexId w = f.nb[f.next++];
        State& sw = st[w];
        State& sv = st[v];
        if (sw.disc == kUndiscovered) {
          sw.parent = v;
          sw.disc = sw.low = clock++;
          edge_stack.push_back({v, w});
          if (v == root) ++root_children;
          stack.push_back({w, 0, g.neighbors(w)});
          // The DFS is latency bound on large graphs; overlap the misses.
          for (VertexId x : stack.back().nb.first(std::min<std::size_t>(stack.back().nb.size(), 8))) {
            __builtin_prefetch(&st[x]);
            __builtin_prefetch(&g.offsets_[x]);
          }
        } else if (w != sv.parent && sw.disc < sv.disc) {
          edge_stack.push_back({v, w});
          sv.low = std::min(sv.low, sw.disc);
        }
        continue;
      }
      stack.pop_back();
      if (stack.empty()) break;
      const VertexId p = stack.back().v;
      State& sp = st[p];
      sp.low = std::min(sp.low, st[v].low);
      if (st[v].low >= sp.disc) {
        if (p != root) out.is_articulation[p] = true;
        close_block({p, v});
      }
    }
    if (root_children > 1) out.is_articulation[root] = true;
  }

  // Order blocks by smallest edge with two stable counting passes (v, then u).
  std::vector<std::size_t> perm(raw.size()), tmp(raw.size());
  std::vector<std::size_t> count(n + 1);
  auto counting_pass = [&](const std::vector<std::size_t>& in, std::vector<std::size_t>& res,
                           auto key) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t i : in) ++count[key(raw[i]) + 1];
    for (std::size_t k = 1; k <= n; ++k) count[k] += count[k - 1];
    for (std::size_t i : in) res[count[key(raw[i])]++] = i;
  };
  std::iota(tmp.begin(), tmp.end(), 0);
  counting_pass(tmp, perm, [](const Raw& r) { return r.key.v; });
  counting_pass(perm, tmp, [](const Raw& r) { return r.key.u; });
  perm.swap(tmp);

  out.vertices.reserve(vbuf.size());
  out.edges.reserve(ebuf.size());
  out.vertex_offsets.reserve(raw.size() + 1);
  out.edge_offsets.reserve(raw.size() + 1);
  for (std::size_t i : perm) {
    const Raw& r = raw[i];
    out.vertices.insert(out.vertices.end(),
                        vbuf.begin() + static_cast<std::ptrdiff_t>(r.vbegin),
                        vbuf.begin() + static_cast<std::ptrdiff_t>(r.vend));
    out.edges.insert(out.edges.end(),
                     ebuf.begin() + static_cast<std::ptrdiff_t>(r.ebegin),
                     ebuf.begin() + static_cast<std::ptrdiff_t>(r.eend));
    out.vertex_offsets.push_back(out.vertices.size());
    out.edge_offsets.push_back(out.edges.size());
  }
  return out;
}

}  // namespace ent2
