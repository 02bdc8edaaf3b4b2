#pragma once

#include <string>

#include "turan/graph.hpp"

namespace turan {

// graph6 text codec.  One byte n+63 for the vertex count (n <= 62), then the
// upper triangle of the adjacency matrix in column-major order packed into
// 6-bit groups, most significant bit first, each group offset by 63.
std::string encode_graph6(const Graph& g);

// Strict decoder: the string must have exactly the right length and all
// padding bits must be zero.
Graph decode_graph6(const std::string& text);

}  // namespace turan
