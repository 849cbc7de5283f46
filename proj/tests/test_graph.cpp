#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ent2/generate.hpp"
#include "ent2/graph.hpp"

using namespace ent2;

TEST(BuildGraph, SortsAdjacencyAndCountsEdges) {
  const Graph g = build_graph(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  auto n0 = g.neighbors(0);
  EXPECT_EQ(std::vector<VertexId>(n0.begin(), n0.end()), (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_EQ(degree(g, 1), 1u);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(BuildGraph, RejectsMalformedEdgesAndReportsThem) {
  auto offending = [](std::size_t n, std::vector<Edge> edges) {
    try {
      build_graph(n, edges);
    } catch (const GraphError& e) {
      return e.edge();
    }
    ADD_FAILURE() << "no error";
    return Edge{};
  };
  EXPECT_EQ(offending(3, {{0, 1}, {1, 1}}), (Edge{1, 1}));
  EXPECT_EQ(offending(3, {{0, 1}, {1, 0}}), (Edge{1, 0}));
  EXPECT_EQ(offending(3, {{0, 3}}), (Edge{0, 3}));
}

TEST(BuildGraph, DegreeOfMissingVertexThrows) {
  const Graph g = build_graph(2, {{0, 1}});
  EXPECT_THROW(g.degree(2), std::out_of_range);
  EXPECT_FALSE(g.has_edge(0, 7));
}

TEST(DiGraph, AllowsLoopsButNotRepeatedArcs) {
  const std::vector<Edge> arcs{{0, 0}, {0, 1}, {1, 0}};
  const DiGraph d = DiGraph::from_arcs(2, arcs);
  EXPECT_EQ(d.arc_count(), 3u);
  EXPECT_TRUE(d.has_arc(0, 0));
  EXPECT_FALSE(d.has_arc(1, 1));
  const std::vector<Edge> repeated{{0, 1}, {0, 1}};
  EXPECT_THROW(DiGraph::from_arcs(2, repeated), GraphError);
}

TEST(DiGraph, SymmetrizeAddsBothDirections) {
  const DiGraph d = DiGraph::symmetrize(path_graph(3));
  EXPECT_EQ(d.arc_count(), 4u);
  EXPECT_TRUE(d.has_arc(1, 0));
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_FALSE(d.has_arc(0, 2));
}

TEST(InducedSubgraph, KeepsOrderAndMapsIds) {
  const Graph g = cycle_graph(5);
  const std::vector<VertexId> keep{4, 0, 1, 1};
  const InducedSubgraph s = induced_subgraph(g, keep);
  EXPECT_EQ(s.to_original, (std::vector<VertexId>{0, 1, 4}));
  EXPECT_EQ(s.from_original[4], 2u);
  EXPECT_EQ(s.from_original[2], kNoVertex);
  EXPECT_EQ(s.graph.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(Components, SortedBySmallestMember) {
  const Graph g = build_graph(6, {{4, 5}, {0, 2}});
  const auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0], (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(comps[1], (std::vector<VertexId>{1}));
  EXPECT_EQ(comps[3], (std::vector<VertexId>{4, 5}));
}

TEST(Dfs, BackEdgeCountIsCyclomaticNumber) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Graph g = erdos_renyi(10, 0.3, rng);
    const TwBE t = dfs_forest(g);
    const std::size_t c = connected_components(g).size();
    EXPECT_EQ(t.back_edges.size(), g.edge_count() - g.vertex_count() + c);
    for (const BackEdge& b : t.back_edges) {
      EXPECT_TRUE(g.has_edge(b.descendant, b.ancestor));
      const auto path = t.tree_path(b.ancestor, b.descendant);
      EXPECT_EQ(path.size(), t.cycle_length(b));
      EXPECT_GE(path.size(), 3u);
      for (std::size_t j = 0; j + 1 < path.size(); ++j) {
        EXPECT_TRUE(g.has_edge(path[j], path[j + 1]));
      }
    }
  }
}

TEST(Dfs, SingleTreeLeavesOtherComponentsUnreached) {
  const Graph g = build_graph(4, {{0, 1}, {2, 3}});
  const TwBE t = dfs_twbe(g, 2);
  EXPECT_TRUE(t.reached(3));
  EXPECT_FALSE(t.reached(0));
  EXPECT_EQ(t.parent[0], kNoVertex);
  EXPECT_EQ(t.order, (std::vector<VertexId>{2, 3}));
}

TEST(Dfs, CycleLengthOfSquareBackEdge) {
  const TwBE t = dfs_twbe(cycle_graph(4), 0);
  ASSERT_EQ(t.back_edges.size(), 1u);
  EXPECT_EQ(t.cycle_length(t.back_edges[0]), 4u);
}

TEST(Blocks, PathBowtieSquareAndIsolatedVertex) {
  const Blocks p3 = biconnected_blocks(path_graph(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_TRUE(p3.is_articulation[1]);
  EXPECT_FALSE(p3.is_articulation[0]);

  const Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const Blocks b = biconnected_blocks(bowtie);
  ASSERT_EQ(b.size(), 2u);
  auto first = b.block_vertices(0);
  EXPECT_EQ(std::vector<VertexId>(first.begin(), first.end()), (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(b.block_edges(1).size(), 3u);
  EXPECT_TRUE(b.is_articulation[2]);

  const Blocks c4 = biconnected_blocks(cycle_graph(4));
  ASSERT_EQ(c4.size(), 1u);
  EXPECT_EQ(std::count(c4.is_articulation.begin(), c4.is_articulation.end(), true), 0);

  const Blocks iso = biconnected_blocks(build_graph(3, {{1, 2}}));
  ASSERT_EQ(iso.size(), 2u);
  EXPECT_EQ(iso.block_vertices(0).size(), 1u);
  EXPECT_EQ(iso.block_vertices(0)[0], 0u);
}

TEST(Blocks, ArticulationPointsSeparateAndBlocksPartitionEdges) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const Graph g = erdos_renyi(9, 0.25, rng);
    const Blocks b = biconnected_blocks(g);
    const std::size_t comps = connected_components(g).size();
    std::vector<Edge> all;
    for (std::size_t k = 0; k < b.size(); ++k) {
      auto e = b.block_edges(k);
      all.insert(all.end(), e.begin(), e.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::vector<VertexId> rest;
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (u != v) rest.push_back(u);
      }
      const std::size_t after = connected_components(induced_subgraph(g, rest).graph).size();
      const bool isolated = g.degree(v) == 0;
      EXPECT_EQ(b.is_articulation[v], after > comps - (isolated ? 1 : 0)) << "vertex " << v;
    }
  }
}

TEST(Blocks, DeepPathDoesNotRecurse) {
  const std::size_t n = 1'000'000;
  const Graph g = path_graph(n);
  const Blocks b = biconnected_blocks(g);
  EXPECT_EQ(b.size(), n - 1);
  const TwBE t = dfs_forest(g);
  EXPECT_EQ(t.depth[n - 1], n - 1);
}
