#pragma once

#include <cstdint>
#include <string>

#include "remh/graph.hpp"

namespace remh {

// graph6: printable ASCII encoding of simple graphs.  Short form covers
// n <= 62; the '~' long form covers n <= 258047.  The upper triangle is
// packed column by column (x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ...), six
// bits per byte, most significant bit first, each byte offset by 63.
// Parsing is strict: an optional ">>graph6<<" header is accepted, padding
// bits must be zero, and trailing bytes are rejected.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Edge list: the first non-blank line holds the vertex count, every
// following non-blank line one "u v" pair, 0-indexed.  Duplicate edges,
// loops and out-of-range endpoints are rejected.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { auto_detect, graph6, edge_list };

// auto_detect: an input whose first non-whitespace byte is a digit is an
// edge list, anything else is graph6.
Graph parse_graph(const std::string& text,
                  GraphFormat format = GraphFormat::auto_detect);

// FNV-1a 64-bit content fingerprint (used to echo inputs in reports).
std::uint64_t fnv1a64(const std::string& bytes);
std::string fingerprint(const Graph& g);  // "fnv1a64:" + 16 hex digits of to_graph6

}  // namespace remh
