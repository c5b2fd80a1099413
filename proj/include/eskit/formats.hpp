#pragma once

// graph6 (short form, n <= 62) and a plain edge-list text format.

#include <string>

#include "eskit/graph.hpp"

namespace eskit {

// Parses one header-less graph6 line.  Rejects the long forms, non-zero
// padding bits, and trailing bytes; ParseError carries the byte offset.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

// First line: vertex count.  Each following non-empty line: "u v".
// ParseError carries the 1-based line number.
Graph parse_edge_list(const std::string& text);
std::string encode_edge_list(const Graph& g);

}  // namespace eskit
