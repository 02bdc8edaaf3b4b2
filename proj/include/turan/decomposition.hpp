#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

inline constexpr int max_chromatic_vertices = 16;

// Exact chromatic number: clique lower bound, greedy upper bound, and
// backtracking k-coloring to close the gap.
int chromatic_number(const Graph& g);

// Minimum chromatic number over the family, minus one.
int subchromatic(const std::vector<Graph>& family);

// (member with t isolated vertices appended) joined to a balanced complete
// (p-1)-partite graph on t vertices.  Vertex order: member, isolated block,
// joined block.
Graph decomposition_host(const Graph& member, int t, int p);

struct DecompositionResult {
  std::string source;                          // graph6 of the target as given
  int p = 0;                                   // chromatic number minus one
  int t_used = 0;
  std::vector<std::string> family;             // canonical graph6, discovery order
  std::vector<EmbeddingWitness> certificates;  // member = index into family
};

// Scan every canonical graph on 2..|V(target)| vertices that has no isolated
// vertex, in (vertex count, edge count, lex) order.  A candidate joins the
// family when its host contains the target and it contains no member already
// found, so the family is exactly the minimal admitting graphs.
DecompositionResult decomposition_family(const Graph& target,
                                         std::optional<int> t = std::nullopt);

}  // namespace turan
