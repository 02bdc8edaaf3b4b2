#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// A bipartition (n0, n1) of n vertices together with the edge count
// n0*n1 + floor((k-1)*n0/2) + 1 the two-sided construction reaches on it.
struct SplitChoice {
  int n0 = 0;
  int n1 = 0;
  long long value = 0;

  bool operator==(const SplitChoice&) const = default;
};

enum class RecipeKind { u_family, k_family, turan_graph };

// How a constructed graph was assembled, for reports and audits.
struct ConstructionRecipe {
  RecipeKind kind = RecipeKind::u_family;
  int n = 0;
  int k = 0;
  std::optional<SplitChoice> split;                 // k_family only
  std::vector<int> component_sizes;                 // descending
  std::optional<std::pair<int, int>> embedded_edge;  // k_family only
};

struct Construction {
  Graph graph;
  ConstructionRecipe recipe;
};

// max over 1 <= n0 <= n-1 of n0*(n-n0) + floor((k-1)*n0/2) + 1, computed by
// the full loop and independently by closed-form argmax candidates; the two
// must agree.
long long f_value(int n, int k);

// The unconstrained argmax split; ties resolve to the larger n0.
SplitChoice best_split(int n, int k);

// Component sizes (descending) for an n-vertex graph whose components are
// (k-1)-regular-ish path-free pieces, or nothing when no sizes work.
std::optional<std::vector<int>> feasible_component_partition(int n, int k);

// Disjoint union of circulant-style components: every vertex has degree k-1
// except one of degree k-2 when parity forces it.  Free of paths on 2k-1
// vertices; edge count floor((k-1)*n/2).
Construction build_regular_pfree(int n, int k);

// Complete bipartite K_{n0,n1} on an optimal split, a build_regular_pfree
// graph inside the larger side, one extra edge inside the smaller side.
Construction build_extremal_family(int n, int k);

// Best split subject to feasibility of the larger side's partition (and
// n0 >= n1 >= 2); nothing when no split qualifies.  Ties resolve to the
// larger n0.
std::optional<SplitChoice> best_feasible_split(int n, int k);

}  // namespace turan
