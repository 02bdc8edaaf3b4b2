#pragma once

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Canonical labeling sits on a backtracking individualization-refinement
// search, which is exponential in the worst case; the limit keeps callers
// honest about where they run it.
inline constexpr int default_canonical_limit = 16;

// Canonical representative of an isomorphism class, as the graph6 encoding
// of the canonically relabeled graph.  Equal strings iff isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g, int limit = default_canonical_limit);

// position_to_old permutation: entry i is the input vertex placed at
// position i of the canonical graph.
std::vector<int> canonical_labeling(const Graph& g, int limit = default_canonical_limit);

Graph canonical_relabel(const Graph& g, int limit = default_canonical_limit);

bool is_isomorphic(const Graph& a, const Graph& b, int limit = default_canonical_limit);

}  // namespace turan
