// graph6.hpp - graph6 encoding (printable offset 63, 6-bit big-endian groups
// over the upper triangle in column order), single graphs and line streams.
#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "planardist/graph.hpp"

namespace planardist {

std::string to_graph6(const Graph& g);

// The N(n) size prefix alone.
std::string graph6_size_field(int n);

// Accepts an optional ">>graph6<<" header and trailing whitespace.
// Throws std::invalid_argument naming the defect for malformed input.
Graph from_graph6(std::string_view text);

// Newline-delimited stream; blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace planardist
