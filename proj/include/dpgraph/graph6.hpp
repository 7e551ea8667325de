#ifndef DPGRAPH_GRAPH6_HPP
#define DPGRAPH_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dpgraph/graph.hpp"

namespace dpgraph {

// graph6 interchange, single-byte-header form only (n <= 62). The header
// byte encodes 63 + n; the remaining bytes pack the upper-triangle
// adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... six per byte, most
// significant bit first, each byte offset by 63.
Graph parse_graph6(std::string_view line);
std::string serialize_graph6(const Graph& g);

// Plain text edge list: a header line "<n> <edge count>", then one
// "u v" pair per line, 0-indexed. Loops and duplicate pairs are rejected.
// With one_indexed the vertices are read as 1..n and shifted down.
Graph parse_edge_list(std::istream& in, bool one_indexed = false);
std::string serialize_edge_list(const Graph& g);

// Undirected DOT, for external rendering.
std::string to_dot(const Graph& g);

// One graph6 line per graph; blank lines and '#' comments are skipped.
std::vector<Graph> read_graph6_file(std::istream& in);

} // namespace dpgraph

#endif
