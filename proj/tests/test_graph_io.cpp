#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "ent2/generate.hpp"
#include "ent2/graph_io.hpp"

using namespace ent2;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::size_t error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}

}  // namespace

TEST(GraphIo, SkipsCommentsAndBlankLines) {
  const Graph g = parse("# square\n\n4 4\n0 1\n  1 2\n# chord-free\n2 3\n3 0\n");
  EXPECT_EQ(g, cycle_graph(4));
}

TEST(GraphIo, ReportsLineOfBadInput) {
  EXPECT_EQ(error_line("3 2\n0 1\n1 5\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n1 1\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n\n1 0\n"), 4u);
  EXPECT_EQ(error_line("3 1\n0 x\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1 2\n"), 2u);
  EXPECT_EQ(error_line("3 1\n0 1\n1 2\n"), 3u);
  EXPECT_EQ(error_line("3 2\n0 1\n"), 2u);
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("-1 0\n"), 1u);
}

TEST(GraphIo, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const Graph g = erdos_renyi(12, 0.3, rng);
    EXPECT_EQ(parse(format_graph(g)), g);
  }
}

TEST(GraphIo, DirectedReaderKeepsArcs) {
  std::istringstream in("2 2\n0 1\n1 1\n");
  const DiGraph d = read_digraph(in);
  EXPECT_TRUE(d.has_arc(0, 1));
  EXPECT_FALSE(d.has_arc(1, 0));
  EXPECT_TRUE(d.has_arc(1, 1));
}

TEST(GraphIo, MissingFileIsAParseError) {
  EXPECT_THROW(read_graph_file("/nonexistent/graph.txt"), ParseError);
}
