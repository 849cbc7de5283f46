#include "ent2/forbidden.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ent2 {

std::vector<VertexId> normalize_cycle(std::vector<VertexId> cycle) {
  if (cycle.size() < 3) return cycle;
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

bool is_simple_cycle(const Graph& g, const std::vector<VertexId>& cycle) {
  if (cycle.size() < 3) return false;
  std::vector<VertexId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.vertex_count()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

namespace {

// Completes the back-edge test inside one biconnected block by replaying an
// ear decomposition (DFS chain decomposition) and tracking the only shapes a
// 2-connected graph of circumference <= k can take:
//   k = 3: a triangle;
//   k = 4: K_{2,r} with or without the hub edge (covers C3, C4, the diamond),
//          or K4.
// Each ear either keeps the block inside these shapes or closes a long cycle
// with the vertices already placed, which is returned.
class EarReplay {
 public:
  EarReplay(std::size_t k, std::size_t n) : k_(k), placed_(n, false) {}

  // `cycle` is the first ear. Returns a long cycle if one is closed.
  std::optional<std::vector<VertexId>> start(const std::vector<VertexId>& cycle) {
    for (VertexId v : cycle) placed_[v] = true;
    if (cycle.size() > k_) return cycle;
    if (cycle.size() == 3) {
      set_theta(cycle[0], cycle[1], {cycle[2]}, true);
    } else {
      set_theta(cycle[0], cycle[2], {cycle[1], cycle[3]}, false);
    }
    return std::nullopt;
  }

  // `ear` runs from one placed vertex to another through new vertices.
  std::optional<std::vector<VertexId>> add(std::vector<VertexId> ear) {
    const VertexId u = ear.front();
    const VertexId w = ear.back();
    if (u == w || !placed_[u] || !placed_[w]) {
      throw std::logic_error("chain is not an open ear of a biconnected block");
    }
    for (std::size_t i = 1; i + 1 < ear.size(); ++i) placed_[ear[i]] = true;
    const std::size_t inner = ear.size() - 2;

    if (k_ == 3) {
      // Triangle plus any ear: the ear and the path through the third vertex.
      ear.push_back(other_than(hubs_and_mids(), u, w));
      return ear;
    }
    if (k4_) {
      for (VertexId x : quad_) {
        if (x != u && x != w) ear.push_back(x);
      }
      return ear;
    }

    const bool u_hub = is_hub(u);
    const bool w_hub = is_hub(w);
    if (u_hub && w_hub) {
      if (u != h1_) std::reverse(ear.begin(), ear.end());
      if (inner == 0) {
        hub_edge_ = true;
        return std::nullopt;
      }
      if (inner == 1) {
        mids_.push_back(ear[1]);
        return std::nullopt;
      }
      ear.push_back(mids_[0]);
      return ear;
    }
    if (u_hub != w_hub) {
      if (!u_hub) std::reverse(ear.begin(), ear.end());
      const VertexId h = ear.front();
      const VertexId m = ear.back();
      const VertexId h_other = h == h1_ ? h2_ : h1_;
      if (inner == 0) throw std::logic_error("hub-mid chord cannot be new");
      if (mids_.size() >= 2) {
        ear.push_back(h_other);
        ear.push_back(mids_[0] != m ? mids_[0] : mids_[1]);
        return ear;
      }
      // Triangle h, m, h_other.
      if (inner >= 2) {
        ear.push_back(h_other);
        return ear;
      }
      set_theta(h, m, {h_other, ear[1]}, true);
      return std::nullopt;
    }

    // Both ends are mids.
    const VertexId m1 = u;
    const VertexId m2 = w;
    if (inner == 0) {
      if (mids_.size() == 2) {
        if (!hub_edge_) {
          set_theta(m1, m2, {h1_, h2_}, true);
        } else {
          k4_ = true;
          quad_ = {h1_, h2_, m1, m2};
        }
        return std::nullopt;
      }
      return std::vector<VertexId>{m1, m2, h1_, third_mid(m1, m2), h2_};
    }
    if (inner >= 2) {
      ear.push_back(h1_);
      return ear;
    }
    const VertexId p = ear[1];
    if (hub_edge_) return std::vector<VertexId>{m1, p, m2, h1_, h2_};
    if (mids_.size() == 2) {
      set_theta(m1, m2, {h1_, h2_, p}, false);
      return std::nullopt;
    }
    return std::vector<VertexId>{m1, p, m2, h1_, third_mid(m1, m2), h2_};
  }

 private:
  void set_theta(VertexId h1, VertexId h2, std::vector<VertexId> mids, bool hub_edge) {
    h1_ = h1;
    h2_ = h2;
    mids_ = std::move(mids);
    hub_edge_ = hub_edge;
  }

  bool is_hub(VertexId v) const { return v == h1_ || v == h2_; }

  std::vector<VertexId> hubs_and_mids() const {
    std::vector<VertexId> all{h1_, h2_};
    all.insert(all.end(), mids_.begin(), mids_.end());
    return all;
  }

  static VertexId other_than(const std::vector<VertexId>& from, VertexId a, VertexId b) {
    for (VertexId x : from) {
      if (x != a && x != b) return x;
    }
    throw std::logic_error("no third vertex");
  }

  VertexId third_mid(VertexId a, VertexId b) const { return other_than(mids_, a, b); }

  std::size_t k_;
  std::vector<bool> placed_;
  VertexId h1_ = kNoVertex;
  VertexId h2_ = kNoVertex;
  std::vector<VertexId> mids_;
  bool hub_edge_ = false;
  bool k4_ = false;
  std::array<VertexId, 4> quad_{};
};

// Long cycle inside a 2-connected block given by its edges (original ids).
std::optional<std::vector<VertexId>> block_long_cycle(std::span<const VertexId> verts,
                                                      std::span<const Edge> edges,
                                                      std::vector<VertexId>& local,
                                                      std::size_t k) {
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<VertexId>(i);
  std::vector<Edge> local_edges;
  local_edges.reserve(edges.size());
  for (const Edge& e : edges) local_edges.push_back({local[e.u], local[e.v]});
  const Graph h = build_graph(verts.size(), local_edges);
  for (VertexId v : verts) local[v] = kNoVertex;

  const TwBE t = dfs_twbe(h, 0);
  std::vector<std::vector<VertexId>> by_ancestor(verts.size());
  for (const BackEdge& b : t.back_edges) by_ancestor[b.ancestor].push_back(b.descendant);

  std::vector<bool> visited(verts.size(), false);
  EarReplay replay(k, verts.size());
  bool first = true;
  std::optional<std::vector<VertexId>> found;
  for (VertexId v : t.order) {
    for (VertexId d : by_ancestor[v]) {
      visited[v] = true;
      std::vector<VertexId> chain{v};
      VertexId x = d;
      while (!visited[x]) {
        visited[x] = true;
        chain.push_back(x);
        x = t.parent[x];
      }
      if (first) {
        if (x != v) throw std::logic_error("first chain is not a cycle");
        found = replay.start(chain);
        first = false;
      } else {
        chain.push_back(x);
        found = replay.add(std::move(chain));
      }
      if (found) {
        for (VertexId& c : *found) c = verts[c];
        return found;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexId>> find_long_cycle(const Graph& g, std::size_t k) {
  if (k > 4) throw std::invalid_argument("find_long_cycle supports k <= 4");
  const TwBE t = dfs_forest(g);
  for (const BackEdge& b : t.back_edges) {
    if (t.cycle_length(b) > k) return normalize_cycle(t.tree_path(b.ancestor, b.descendant));
  }
  if (k < 3) return std::nullopt;  // every cycle has length >= 3 > k

  const Blocks blocks = biconnected_blocks(g);
  std::vector<VertexId> local(g.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto verts = blocks.block_vertices(i);
    if (verts.size() <= k) continue;
    if (auto cycle = block_long_cycle(verts, blocks.block_edges(i), local, k)) {
      auto norm = normalize_cycle(std::move(*cycle));
      if (norm.size() <= k || !is_simple_cycle(g, norm)) {
        throw std::logic_error("ear replay produced an invalid cycle");
      }
      return norm;
    }
  }
  return std::nullopt;
}

namespace {

// Vertices by degree descending, ties by id.
std::vector<VertexId> degree_order(const Graph& g) {
  std::vector<VertexId> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

}  // namespace

// Triangle listing in degree order: each triangle is seen from its first
// vertex, so the work is O(arboricity * m).
std::optional<Triangle3C> find_3c_violation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> removed(n, false);
  std::vector<VertexId> mark(n, kNoVertex);
  for (VertexId v : degree_order(g)) {
    if (g.degree(v) < 3) break;
    for (VertexId u : g.neighbors(v)) mark[u] = v;
    for (VertexId u : g.neighbors(v)) {
      if (removed[u] || g.degree(u) < 3) continue;
      for (VertexId w : g.neighbors(u)) {
        if (w != v && !removed[w] && mark[w] == v && g.degree(w) >= 3) {
          Triangle3C t{{v, u, w}};
          std::sort(t.triangle.begin(), t.triangle.end());
          return t;
        }
      }
    }
    removed[v] = true;
  }
  return std::nullopt;
}

// Square listing in degree order (each square is seen from its first vertex v
// together with the opposite vertex w and both middles).
std::optional<SquareAC> find_ac_violation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> removed(n, false);
  std::vector<std::vector<VertexId>> via(n);
  std::vector<VertexId> touched;
  auto high = [&](VertexId x) { return g.degree(x) > 2; };
  for (VertexId v : degree_order(g)) {
    for (VertexId u : g.neighbors(v)) {
      if (removed[u]) continue;
      for (VertexId w : g.neighbors(u)) {
        if (w == v || removed[w]) continue;
        if (via[w].empty()) touched.push_back(w);
        via[w].push_back(u);
      }
    }
    std::optional<SquareAC> hit;
    for (VertexId w : touched) {
      const auto& mids = via[w];
      if (hit || mids.size() < 2) continue;
      for (VertexId u : mids) {
        if (!high(u) || !(high(v) || high(w))) continue;
        const VertexId other = mids[0] != u ? mids[0] : mids[1];
        SquareAC s;
        auto cyc = normalize_cycle({v, u, w, other});
        std::copy(cyc.begin(), cyc.end(), s.square.begin());
        s.pair = high(v) ? std::array<VertexId, 2>{v, u} : std::array<VertexId, 2>{u, w};
        std::sort(s.pair.begin(), s.pair.end());
        hit = s;
        break;
      }
    }
    for (VertexId w : touched) via[w].clear();
    touched.clear();
    if (hit) return hit;
    removed[v] = true;
  }
  return std::nullopt;
}

ConditionVerdict check_conditions(const Graph& g) {
  ConditionVerdict out;
  if (auto c = find_long_cycle(g, 4)) {
    out.cs_ok = false;
    out.witness = LongCycle{std::move(*c)};
  }
  if (auto t = find_3c_violation(g)) {
    out.no3c_ok = false;
    if (!out.witness) out.witness = *t;
  }
  if (auto s = find_ac_violation(g)) {
    out.noac_ok = false;
    if (!out.witness) out.witness = *s;
  }
  if (out.witness && !is_valid_witness(g, *out.witness)) {
    throw std::logic_error("invalid witness: " + describe(*out.witness));
  }
  return out;
}

bool is_valid_witness(const Graph& g, const Witness& w) {
  if (const auto* c = std::get_if<LongCycle>(&w)) {
    return c->cycle.size() > 4 && is_simple_cycle(g, c->cycle);
  }
  if (const auto* t = std::get_if<Triangle3C>(&w)) {
    std::vector<VertexId> tri(t->triangle.begin(), t->triangle.end());
    if (!is_simple_cycle(g, tri)) return false;
    return std::all_of(tri.begin(), tri.end(), [&](VertexId v) { return g.degree(v) >= 3; });
  }
  const auto& s = std::get<SquareAC>(w);
  std::vector<VertexId> sq(s.square.begin(), s.square.end());
  if (!is_simple_cycle(g, sq)) return false;
  const auto [a, b] = s.pair;
  if (g.degree(a) <= 2 || g.degree(b) <= 2) return false;
  for (std::size_t i = 0; i < 4; ++i) {
    const VertexId x = sq[i], y = sq[(i + 1) % 4];
    if ((x == a && y == b) || (x == b && y == a)) return true;
  }
  return false;
}

std::string describe(const Witness& w) {
  std::ostringstream os;
  if (const auto* c = std::get_if<LongCycle>(&w)) {
    os << "long-cycle:";
    for (VertexId v : c->cycle) os << ' ' << v;
  } else if (const auto* t = std::get_if<Triangle3C>(&w)) {
    os << "triangle-3c: " << t->triangle[0] << ' ' << t->triangle[1] << ' ' << t->triangle[2];
  } else {
    const auto& s = std::get<SquareAC>(w);
    os << "square-ac: " << s.square[0] << ' ' << s.square[1] << ' ' << s.square[2] << ' '
       << s.square[3] << " pair " << s.pair[0] << ' ' << s.pair[1];
  }
  return os.str();
}

}  // namespace ent2
