// Plain-text edge-list format shared by every command:
//
//   n m
//   u v      (m lines, 0 <= u, v < n)
//
// Lines starting with '#' and blank lines are ignored.

#ifndef ENT2_GRAPH_IO_HPP
#define ENT2_GRAPH_IO_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "ent2/graph.hpp"

namespace ent2 {

/// Malformed input; `line()` is 1-based, 0 when no line applies.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct EdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;  // source line of each edge
};

/// Syntax only; range and simplicity checks happen in read_graph/read_digraph.
EdgeList parse_edge_list(std::istream& in);

Graph read_graph(std::istream& in);
DiGraph read_digraph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);
DiGraph read_digraph_file(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

}  // namespace ent2

#endif  // ENT2_GRAPH_IO_HPP
