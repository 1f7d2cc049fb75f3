#pragma once

#include <string>
#include <string_view>

#include "mft/graph.hpp"

namespace mft::io {

/// Parses the edge-list format:
///
///   # comment
///   graph undirected 3
///   1 2 1/2
///   2 3 0.25
///
/// Vertices are 1-based in the text. Weights are integers, exact decimals or
/// p/q. Duplicate lines become parallel instances in file order.
/// Throws ParseError for malformed text and ValidationError for self-loops or
/// out-of-range vertices.
AnyGraph parse_graph(std::string_view text);

/// Reads and parses a file. Throws ParseError if it cannot be read.
AnyGraph load_graph(const std::string& path);

/// Inverse of parse_graph; weights are written as integers or p/q.
std::string serialize_graph(const AnyGraph& g);

}  // namespace mft::io
