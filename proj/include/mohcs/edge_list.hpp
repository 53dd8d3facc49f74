#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "mohcs/graph.hpp"

namespace mohcs {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

struct EdgeListStats {
    std::size_t lines = 0;
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

struct ParsedGraph {
    Graph graph;
    EdgeListStats stats;
};

/// Reads an edge list: one edge per line as two labels separated by
/// whitespace and/or a comma. Blank lines and lines starting with '#' are
/// skipped. A line with a single label declares an isolated vertex.
/// Vertex ids follow first appearance.
ParsedGraph read_edge_list(std::istream& in);
ParsedGraph read_edge_list_file(const std::string& path);

/// Writes every edge once, in ascending id order, followed by any
/// isolated vertex on a line of its own.
void write_edge_list(std::ostream& out, const Graph& g);

/// One vertex set per line, labels space-separated.
void write_vertex_sets(std::ostream& out, const Graph& g, const std::vector<VertexSet>& sets);
std::vector<VertexSet> read_vertex_sets(std::istream& in, const Graph& g);

}  // namespace mohcs
