// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ent2/decider.hpp"
#include "ent2/graph_io.hpp"
#include "ent2/forbidden.hpp"
#include "ent2/game.hpp"
#include "ent2/generate.hpp"
#include "oracles.hpp"

using namespace ent2;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t mask_count(std::size_t n) {
  return std::uint64_t{1} << (n < 2 ? 0 : n * (n - 1) / 2);
}

void for_all_graphs(std::size_t max_n, const std::function<void(const Graph&)>& f) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::uint64_t mask = 0; mask < mask_count(n); ++mask) f(graph_from_mask(n, mask));
  }
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

// Counts graphs on which find_long_cycle(g, 4) is absent but m > 3n - 1.
struct SparseBound {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first;

  void observe(const Graph& g) {
    if (g.vertex_count() == 0) return;  // 3n - 1 is negative, the bound is vacuous
    if (find_long_cycle(g, 4)) return;
    ++checked;
    if (g.edge_count() + 1 > 3 * g.vertex_count()) {
      if (violations++ == 0) first = format_graph(g);
    }
  }
};

std::string agreement(const Graph& g) {
  const bool game = game_entanglement_at_most(g, 2);
  const bool s = decide_superstructure(g, false).accepted;
  const bool t = decide_glue_traversal(g).accepted;
  const bool c = check_conditions(g).all_ok();
  if (s == game && t == game && c == game) return {};
  return "game=" + std::to_string(game) + " superstructure=" + std::to_string(s) +
         " traversal=" + std::to_string(t) + " conditions=" + std::to_string(c) + " on\n" +
         format_graph(g);
}

Outcome criterion1() {
  Outcome o;
  auto expect = [&](const std::string& name, std::size_t got, std::size_t want) {
    if (got != want) o.fail(name + " = " + std::to_string(got) + ", want " + std::to_string(want));
  };
  for (std::size_t n = 5; n <= 9; ++n) {
    expect("Ent(C" + std::to_string(n) + ")", entanglement(cycle_graph(n)), 3);
    expect("oracle Ent(C" + std::to_string(n) + ")", oracle::entanglement(cycle_graph(n)), 3);
  }
  expect("Ent(3C)", entanglement(threec_graph()), 3);
  expect("oracle Ent(3C)", oracle::entanglement(threec_graph()), 3);
  expect("Ent(AC)", entanglement(ac_graph()), 3);
  expect("oracle Ent(AC)", oracle::entanglement(ac_graph()), 3);
  for (int eps = 0; eps <= 1; ++eps) {
    for (std::size_t n = 0; n <= 6; ++n) {
      const std::size_t e = entanglement(theta_graph(eps, n));
      if (e > 2) o.fail("Ent(theta " + std::to_string(eps) + " " + std::to_string(n) + ") = " + std::to_string(e));
    }
  }
  std::size_t graphs = 0;
  for_all_graphs(5, [&](const Graph& g) {
    ++graphs;
    const std::size_t e = entanglement(g);
    if (e != oracle::entanglement(g)) o.fail("solver and oracle differ on\n" + format_graph(g));
    if ((e == 0) != (g.edge_count() == 0)) o.fail("Ent = 0 mismatch on\n" + format_graph(g));
    if ((e <= 1) != oracle::is_star_forest(g)) o.fail("Ent <= 1 mismatch on\n" + format_graph(g));
    if ((e <= 1) != entanglement_leq1_undirected(g).ok) o.fail("star check mismatch on\n" + format_graph(g));
  });
  if (o.pass) o.detail = std::to_string(graphs) + " graphs with n <= 5, all families exact";
  return o;
}

Outcome criterion2(SparseBound& bound) {
  Outcome o;
  std::size_t graphs = 0;
  for_all_graphs(6, [&](const Graph& g) {
    ++graphs;
    bound.observe(g);
    if (!o.pass) return;
    const std::string d = agreement(g);
    if (!d.empty()) o.fail(d);
  });
  if (o.pass) o.detail = std::to_string(graphs) + " graphs with n <= 6, zero disagreements";
  return o;
}

Outcome criterion3(SparseBound& bound) {
  Outcome o;
  std::mt19937_64 rng(20260101);
  std::size_t yes = 0;
  constexpr std::size_t kSamples = 10'000;
  for (std::size_t i = 0; i < kSamples; ++i) {
    const Graph g = mixed_sample(rng, 7, 12);
    bound.observe(g);
    yes += game_entanglement_at_most(g, 2) ? 1 : 0;
    const std::string d = agreement(g);
    if (!d.empty()) o.fail("sample " + std::to_string(i) + ": " + d);
  }
  if (o.pass) {
    o.detail = std::to_string(kSamples) + " samples (" + std::to_string(yes) +
               " with Ent <= 2), zero disagreements";
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> size(0, 9995);
  std::size_t largest = 0;
  constexpr std::size_t kSamples = 1000;
  for (std::size_t i = 0; i < kSamples; ++i) {
    Zeta2Params p;
    p.min_vertices = size(rng);
    const Zeta2Sample s = generate_zeta2(rng(), p);
    largest = std::max(largest, s.graph.vertex_count());
    if (s.graph.vertex_count() > 10'000) o.fail("generator exceeded 10^4 vertices");
    const Decision d = decide_superstructure(s.graph);
    if (!d.accepted) {
      o.fail("sample " + std::to_string(i) + " rejected: " + d.rejection);
      continue;
    }
    const Verification v = verify_certificate(*d.certificate, s.graph);
    if (!v.ok) o.fail("sample " + std::to_string(i) + " certificate invalid: " + v.reason);
  }
  if (o.pass) {
    o.detail = std::to_string(kSamples) + "/" + std::to_string(kSamples) +
               " accepted and verified, largest n = " + std::to_string(largest);
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  constexpr std::size_t kPairs = 500;
  for (std::size_t i = 0; i < kPairs; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.8)(rng);
    const Graph g = erdos_renyi(n, p, rng);
    // H: drop each vertex with probability 1/4 and each surviving edge with probability 1/3.
    std::bernoulli_distribution drop_vertex(0.25), drop_edge(1.0 / 3.0);
    std::vector<VertexId> id(n, kNoVertex);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!drop_vertex(rng)) id[v] = next++;
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
      if (id[e.u] != kNoVertex && id[e.v] != kNoVertex && !drop_edge(rng)) kept.push_back({id[e.u], id[e.v]});
    }
    const Graph h = build_graph(next, kept);
    const std::size_t eg = entanglement(g), eh = entanglement(h);
    if (eh > eg) o.fail("Ent(H) = " + std::to_string(eh) + " > Ent(G) = " + std::to_string(eg));
  }
  if (o.pass) o.detail = std::to_string(kPairs) + "/" + std::to_string(kPairs) + " pairs monotone";
  return o;
}

Outcome criterion6(const SparseBound& bound) {
  Outcome o;
  if (bound.violations) {
    o.fail(std::to_string(bound.violations) + " violations, first:\n" + bound.first);
  } else {
    o.detail = std::to_string(bound.checked) + " long-cycle-free graphs with n >= 1, zero violations";
  }
  return o;
}

// Timing protocol: every size is timed with a cold cache (a sweep over a
// buffer larger than the last-level cache precedes each run), repetitions
// are interleaved across sizes so a burst of machine noise hits all sizes
// alike, and the minimum per size is kept.
Outcome criterion7() {
  Outcome o;
  constexpr int kReps = 7;
  constexpr int kMinExp = 14, kMaxExp = 20;
  const auto t_total = Clock::now();
  std::vector<Graph> graphs;
  for (int e = kMinExp; e <= kMaxExp; ++e) {
    Zeta2Params p;
    p.min_vertices = std::size_t{1} << e;
    graphs.push_back(generate_zeta2(static_cast<std::uint64_t>(e), p).graph);
  }
  std::vector<char> sweep(std::size_t{256} << 20);
  auto evict = [&] {
    for (std::size_t i = 0; i < sweep.size(); i += 64) ++sweep[i];
  };
  std::vector<double> times(graphs.size(), 1e9);
  for (int r = 0; r < kReps; ++r) {
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      evict();
      const auto t0 = Clock::now();
      const Decision d = decide_superstructure(graphs[i]);
      times[i] = std::min(times[i], seconds_since(t0));
      if (!d.accepted) o.fail("2^" + std::to_string(kMinExp + i) + " rejected: " + d.rejection);
    }
  }
  std::string detail;
  for (std::size_t i = 0; i < times.size(); ++i) {
    char buf[64];
    if (i == 0) {
      std::snprintf(buf, sizeof buf, "2^%zu:%.4fs", kMinExp + i, times[i]);
    } else {
      std::snprintf(buf, sizeof buf, " 2^%zu:%.4fs(x%.2f)", kMinExp + i, times[i], times[i] / times[i - 1]);
    }
    detail += buf;
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double ratio = times[i] / times[i - 1];
    if (ratio > 2.5) o.fail("ratio " + std::to_string(ratio) + " at 2^" + std::to_string(kMinExp + i) + "; " + detail);
  }
  if (times.back() >= 5.0) o.fail("2^20 took " + std::to_string(times.back()) + " s");
  const double total = seconds_since(t_total);
  if (total >= 60.0) o.fail("total " + std::to_string(total) + " s");
  if (o.pass) o.detail = detail;
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t graphs = 0, present = 0;
  for_all_graphs(7, [&](const Graph& g) {
    ++graphs;
    const bool fast = find_long_cycle(g, 4).has_value();
    present += fast ? 1 : 0;
    if (fast != oracle::has_cycle_at_least(g, 5)) o.fail("disagreement on\n" + format_graph(g));
  });
  if (o.pass) {
    o.detail = std::to_string(graphs) + " graphs with n <= 7 (" + std::to_string(present) +
               " with a long cycle), zero disagreements";
  }
  return o;
}

}  // namespace

int main() {
  SparseBound bound;
  struct Row {
    int id;
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const std::vector<Row> rows{
      {1, "oracle values", 10.0, criterion1},
      {2, "exhaustive equivalence n <= 6", 300.0, [&] { return criterion2(bound); }},
      {3, "randomized equivalence n in [7,12]", 600.0, [&] { return criterion3(bound); }},
      {4, "certificate round-trip", 1e9, criterion4},
      {5, "subgraph monotonicity", 1e9, criterion5},
      {6, "sparse-graph bound", 1e9, [&] { return criterion6(bound); }},
      {7, "linear scaling", 60.0, criterion7},
      {8, "long-cycle detector n <= 7", 1e9, criterion8},
  };
  int failures = 0;
  for (const Row& row : rows) {
    const auto t0 = Clock::now();
    Outcome o = row.run();
    const double t = seconds_since(t0);
    if (t >= row.limit) o.fail("time limit " + std::to_string(row.limit) + " s exceeded");
    std::printf("criterion %d (%s): %s %s [%.2fs]\n", row.id, row.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), t);
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
