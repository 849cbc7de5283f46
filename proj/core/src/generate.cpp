#include "ent2/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ent2 {

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
  }
  return build_graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.push_back({static_cast<VertexId>(i - 1), static_cast<VertexId>(i)});
  }
  return build_graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.push_back({0, static_cast<VertexId>(i)});
  return build_graph(leaves + 1, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return build_graph(n, edges);
}

Graph theta_graph(int eps, std::size_t n) { return make_molecule(eps, n).graph; }

Graph threec_graph() { return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}); }

Graph ac_graph() { return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}}); }

Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return build_graph(n, edges);
}

Zeta2Sample generate_zeta2(std::uint64_t seed, const Zeta2Params& params) {
  if (params.molecules == 0) throw std::invalid_argument("need at least one molecule");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dead_count(0, params.max_dead);
  std::bernoulli_distribution coin(0.5);

  auto draw_shape = [&](int& eps, std::size_t& n) {
    do {
      eps = coin(rng) ? 1 : 0;
      n = dead_count(rng);
    } while (eps == 0 && n < 2);
  };

  Zeta2Sample out;
  Certificate& cert = out.certificate;
  std::vector<Edge> edges;
  std::vector<VertexId> glue;  // current glue points of the running expression
  VertexId next_id = 0;
  std::vector<VertexId> deads;

  auto add = [&](VertexId a) {
    int eps;
    std::size_t n;
    draw_shape(eps, n);
    const VertexId b = next_id++;
    deads.resize(n);
    for (VertexId& d : deads) d = next_id++;
    if (eps == 1) edges.push_back({a, b});
    for (VertexId d : deads) {
      edges.push_back({a, d});
      edges.push_back({b, d});
    }
    glue.push_back(b);
    return cert.add_molecule(eps, a, b, deads);
  };

  const VertexId first = next_id++;
  glue.push_back(first);
  Certificate::NodeId expr = add(first);
  for (std::size_t i = 1; i < params.molecules || next_id < params.min_vertices; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, glue.size() - 1);
    const VertexId z = glue[pick(rng)];
    const auto mol = add(z);
    // Collapsing on either side of the running expression keeps shapes varied.
    expr = coin(rng) ? cert.add_collapse(z, expr, mol) : cert.add_collapse(z, mol, expr);
  }
  cert.add_root(expr);

  std::vector<VertexId> relabel(next_id);
  std::iota(relabel.begin(), relabel.end(), VertexId{0});
  std::shuffle(relabel.begin(), relabel.end(), rng);
  for (Edge& e : edges) e = {relabel[e.u], relabel[e.v]};
  cert.relabel(relabel);
  out.graph = build_graph(next_id, edges);
  return out;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if (bit < 64 && ((mask >> bit) & 1U)) edges.push_back({u, v});
    }
  }
  if (bit < 64 && (mask >> bit) != 0) throw std::invalid_argument("mask has bits beyond the pairs");
  return build_graph(n, edges);
}

namespace {

Graph with_extra_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : extra) edges.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return build_graph(g.vertex_count(), edges);
}

Graph zeta2_of_size(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  for (;;) {
    Zeta2Params params;
    params.max_dead = 3;
    params.min_vertices = min_n;
    Graph g = generate_zeta2(rng(), params).graph;
    if (g.vertex_count() <= max_n) return g;
  }
}

}  // namespace

Graph mixed_sample(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  if (min_n > max_n) throw std::invalid_argument("min_n > max_n");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
  const double dn = static_cast<double>(std::max<std::size_t>(n, 1));
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return erdos_renyi(n, 2.5 / dn, rng);
    case 1: {
      if (n < 6) return erdos_renyi(n, 2.5 / dn, rng);
      Graph base = erdos_renyi(n, 1.2 / dn, rng);
      std::vector<VertexId> p(n);
      std::iota(p.begin(), p.end(), VertexId{0});
      std::shuffle(p.begin(), p.end(), rng);
      std::vector<Edge> planted;
      switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
        case 0:  // 3C
          planted = {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[0]},
                     {p[0], p[3]}, {p[1], p[4]}, {p[2], p[5]}};
          break;
        case 1:  // AC
          planted = {{p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]},
                     {p[3], p[0]}, {p[0], p[4]}, {p[1], p[5]}};
          break;
        default: {  // long cycle
          const std::size_t len = std::uniform_int_distribution<std::size_t>(5, n)(rng);
          for (std::size_t i = 0; i < len; ++i) planted.push_back({p[i], p[(i + 1) % len]});
        }
      }
      return with_extra_edges(base, planted);
    }
    case 2:
      return zeta2_of_size(rng, min_n, max_n);
    default: {
      Graph g = zeta2_of_size(rng, min_n, max_n);
      const std::size_t m = g.vertex_count();
      if (g.edge_count() == m * (m - 1) / 2) return g;
      std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(m - 1));
      for (;;) {
        const VertexId u = pick(rng), v = pick(rng);
        if (u != v && !g.has_edge(u, v)) return with_extra_edges(g, {{u, v}});
      }
    }
  }
}

}  // namespace ent2
