#include "ent2/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace ent2 {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
  }
  return value;
}

template <typename Build>
auto build_with_lines(const EdgeList& list, Build build) {
  try {
    return build(list.n, list.edges);
  } catch (const GraphError& e) {
    std::size_t line = 0;
    for (std::size_t i = 0; i < list.edges.size(); ++i) {
      if (list.edges[i] == e.edge()) line = list.lines[i];
    }
    throw ParseError(e.what(), line);
  }
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return in;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
  EdgeList list;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (toks.size() != 2) {
      throw ParseError("expected two integers, got " + std::to_string(toks.size()) + " fields",
                       lineno);
    }
    std::uint64_t a = to_uint(toks[0], lineno);
    std::uint64_t b = to_uint(toks[1], lineno);
    if (!have_header) {
      if (a >= kNoVertex) throw ParseError("vertex count too large", lineno);
      list.n = a;
      expected = b;
      have_header = true;
      continue;
    }
    if (list.edges.size() == expected) {
      throw ParseError("more than the declared " + std::to_string(expected) + " edges", lineno);
    }
    if (a >= list.n || b >= list.n) {
      throw ParseError("vertex id out of range [0," + std::to_string(list.n) + ")", lineno);
    }
    list.edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    list.lines.push_back(lineno);
  }
  if (!have_header) throw ParseError("missing 'n m' header", lineno ? lineno : 1);
  if (list.edges.size() != expected) {
    throw ParseError("declared " + std::to_string(expected) + " edges, found " +
                         std::to_string(list.edges.size()),
                     lineno);
  }
  return list;
}

Graph read_graph(std::istream& in) {
  return build_with_lines(parse_edge_list(in), [](std::size_t n, const std::vector<Edge>& e) {
    return build_graph(n, e);
  });
}

DiGraph read_digraph(std::istream& in) {
  return build_with_lines(parse_edge_list(in), [](std::size_t n, const std::vector<Edge>& e) {
    return DiGraph::from_arcs(n, e);
  });
}

Graph read_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_graph(in);
}

DiGraph read_digraph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_digraph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

}  // namespace ent2
