// Graph families and random generators used by tests, benchmarks and the CLI.

#ifndef ENT2_GENERATE_HPP
#define ENT2_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "ent2/graph.hpp"
#include "ent2/zeta2.hpp"

namespace ent2 {

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Center 0 with leaves 1..leaves.
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
Graph theta_graph(int eps, std::size_t n);
/// Triangle 0 1 2 with a pendant at each corner (3 at 0, 4 at 1, 5 at 2).
Graph threec_graph();
/// Square 0 1 2 3 with pendants 4 at 0 and 5 at 1.
Graph ac_graph();

/// G(n, p).
Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng);

/// Labeled graph on n vertices whose edge set is given by the bits of `mask`;
/// bit i stands for the i-th pair (u, v), u < v, in lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

struct Zeta2Params {
  std::size_t molecules = 1;
  std::size_t max_dead = 4;
  /// Keep adding molecules until the graph has at least this many vertices.
  std::size_t min_vertices = 0;
};

struct Zeta2Sample {
  Graph graph;
  Certificate certificate;  // verifies against `graph`
};

/// Random legal collapses of random molecules, then a random relabeling.
/// theta^{0,0} and theta^{0,1} are never drawn, so the result is connected.
Zeta2Sample generate_zeta2(std::uint64_t seed, const Zeta2Params& params);

/// Test-corpus mix on n in [min_n, max_n] vertices: sparse G(n, 2.5/n),
/// sparse graphs with a planted 3C, AC or long cycle, zeta2 samples, and
/// zeta2 samples plus one extra edge, in roughly equal shares.
Graph mixed_sample(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n);

}  // namespace ent2

#endif  // ENT2_GENERATE_HPP
