#include "turan/graph6.hpp"

#include <cstddef>
#include <string>

#include "turan/errors.hpp"

namespace turan {

namespace {

constexpr int max_encodable = 62;

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > max_encodable) {
    throw capability_error("graph6 encoding supports at most " + std::to_string(max_encodable) +
                           " vertices, got " + std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (((g.neighbors(i) >> j) & 1ULL) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph decode_graph6(const std::string& text) {
  if (text.empty()) throw parse_error("empty graph6 string", 0);
  const unsigned char header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw capability_error("multi-byte graph6 headers are not supported");
  }
  if (header < 63 || header > 63 + max_encodable) {
    throw parse_error("invalid graph6 header byte", 0);
  }
  const int n = header - 63;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw parse_error("graph6 byte out of range", i);
    }
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() < expected) {
    throw parse_error("graph6 string truncated, expected " + std::to_string(expected) +
                          " bytes for " + std::to_string(n) + " vertices",
                      text.size());
  }
  if (text.size() > expected) {
    throw parse_error("trailing bytes after graph6 data", expected);
  }
  Graph g = Graph::empty(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const std::size_t byte_index = 1 + bit / 6;
      const int value = static_cast<unsigned char>(text[byte_index]) - 63;
      if ((value >> (5 - bit % 6)) & 1) g = g.with_edge(i, j);
      ++bit;
    }
  }
  if (bits % 6) {
    const std::size_t last = text.size() - 1;
    const int value = static_cast<unsigned char>(text[last]) - 63;
    if (value & ((1 << (6 - bits % 6)) - 1)) {
      throw parse_error("nonzero padding bits in graph6 string", last);
    }
  }
  return g;
}

}  // namespace turan
