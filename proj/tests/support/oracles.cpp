#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

namespace ent2::oracle {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.vertex_count() > 64) throw std::invalid_argument("oracle limited to 64 vertices");
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

bool has_cycle_at_least(const Graph& g, std::size_t min_length) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.vertex_count();
  // Simple paths starting at s through vertices larger than s.
  std::function<bool(std::size_t, std::size_t, std::uint64_t, std::size_t)> extend =
      [&](std::size_t s, std::size_t v, std::uint64_t used, std::size_t len) {
        if (len >= min_length && len >= 3 && ((adj[v] >> s) & 1U)) return true;
        for (std::size_t w = s + 1; w < n; ++w) {
          if (((adj[v] >> w) & 1U) && !((used >> w) & 1U)) {
            if (extend(s, w, used | (std::uint64_t{1} << w), len + 1)) return true;
          }
        }
        return false;
      };
  for (std::size_t s = 0; s < n; ++s) {
    if (extend(s, s, std::uint64_t{1} << s, 1)) return true;
  }
  return false;
}

bool cops_win(const Graph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw std::invalid_argument("naive game oracle limited to 12 vertices");
  const auto adj = adjacency_masks(g);
  const std::size_t sets = std::size_t{1} << n;
  // cops[v][c]: cops to move, thief on v, cops on c; thief[v][c] likewise.
  std::vector<std::vector<bool>> cops(n, std::vector<bool>(sets, false));
  std::vector<std::vector<bool>> thief(n, std::vector<bool>(sets, false));
  auto fits = [&](std::uint64_t c) { return static_cast<std::size_t>(std::popcount(c)) <= k; };

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      const std::uint64_t vb = std::uint64_t{1} << v;
      for (std::uint64_t c = 0; c < sets; ++c) {
        if (!fits(c)) continue;
        if (!thief[v][c]) {
          bool all = true;
          for (std::size_t w = 0; w < n; ++w) {
            if (((adj[v] >> w) & 1U) && !((c >> w) & 1U) && !cops[w][c]) all = false;
          }
          if (all) {
            thief[v][c] = true;
            changed = true;
          }
        }
        if (!cops[v][c]) {
          bool win = thief[v][c];
          if (!(c & vb)) {
            if (fits(c | vb) && thief[v][c | vb]) win = true;
            for (std::size_t x = 0; x < n; ++x) {
              if (((c >> x) & 1U) && thief[v][(c & ~(std::uint64_t{1} << x)) | vb]) win = true;
            }
          }
          if (win) {
            cops[v][c] = true;
            changed = true;
          }
        }
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!cops[v][0]) return false;
  }
  return true;
}

std::size_t entanglement(const Graph& g) {
  for (std::size_t k = 0;; ++k) {
    if (cops_win(g, k)) return k;
  }
}

bool is_star_forest(const Graph& g) {
  for (const auto& comp : connected_components(g)) {
    std::size_t edges2 = 0, centers = 0;
    for (VertexId v : comp) {
      edges2 += g.degree(v);
      if (g.degree(v) > 1) ++centers;
    }
    if (edges2 / 2 + 1 != comp.size() || centers > 1) return false;
  }
  return true;
}

bool has_certificate(const Graph& g, const std::vector<VertexId>& glue) {
  const auto adj = adjacency_masks(g);
  std::uint64_t gl = 0;
  for (VertexId v : glue) gl |= std::uint64_t{1} << v;
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> memo;

  auto is_molecule = [&](std::uint64_t vs, std::uint64_t gs) {
    if (std::popcount(gs) != 2) return false;
    for (std::uint64_t rest = vs & ~gs; rest; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      if ((adj[x] & vs) != gs) return false;
    }
    return true;
  };
  auto components = [&](std::uint64_t vs) {
    std::vector<std::uint64_t> out;
    while (vs) {
      std::uint64_t comp = vs & (~vs + 1), frontier = comp;
      while (frontier) {
        const int x = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[x] & vs & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      out.push_back(comp);
      vs &= ~comp;
    }
    return out;
  };

  std::function<bool(std::uint64_t, std::uint64_t)> cert = [&](std::uint64_t vs,
                                                                std::uint64_t gs) {
    auto key = std::make_pair(vs, gs);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    if (std::popcount(vs) == 1) {
      ok = gs == vs;
    } else if (is_molecule(vs, gs)) {
      ok = true;
    } else {
      for (std::uint64_t zs = gs; zs && !ok; zs &= zs - 1) {
        const std::uint64_t zb = zs & (~zs + 1);
        const auto comps = components(vs & ~zb);
        if (comps.size() < 2) continue;
        // Groups containing comps[0]; the rest forms the other operand.
        const std::uint64_t choices = std::uint64_t{1} << (comps.size() - 1);
        for (std::uint64_t pick = 0; pick + 1 < choices && !ok; ++pick) {
          std::uint64_t left = comps[0];
          for (std::size_t i = 1; i < comps.size(); ++i) {
            if ((pick >> (i - 1)) & 1U) left |= comps[i];
          }
          const std::uint64_t v1 = left | zb, v2 = (vs & ~left);
          ok = cert(v1, gs & v1) && cert(v2, gs & v2);
        }
      }
    }
    memo[key] = ok;
    return ok;
  };
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return cert(all, gl);
}

bool isomorphic(const GlueGraph& a, const GlueGraph& b) {
  const std::size_t n = a.graph.vertex_count();
  if (n != b.graph.vertex_count() || a.graph.edge_count() != b.graph.edge_count() ||
      a.glue.size() != b.glue.size()) {
    return false;
  }
  if (n > 8) throw std::invalid_argument("isomorphism oracle limited to 8 vertices");
  auto signature = [](const GlueGraph& g, VertexId v) {
    return std::make_pair(g.graph.degree(v), g.is_glue(v));
  };
  std::vector<VertexId> map(n, kNoVertex);
  std::vector<bool> used(n, false);
  std::function<bool(VertexId)> place = [&](VertexId v) {
    if (v == n) return true;
    for (VertexId w = 0; w < n; ++w) {
      if (used[w] || signature(a, v) != signature(b, w)) continue;
      bool consistent = true;
      for (VertexId u = 0; u < v && consistent; ++u) {
        consistent = a.graph.has_edge(u, v) == b.graph.has_edge(map[u], w);
      }
      if (!consistent) continue;
      map[v] = w;
      used[w] = true;
      if (place(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace ent2::oracle
