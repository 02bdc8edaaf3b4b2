#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/pattern.hpp"

namespace turan {

enum class SearchMethod { exhaustive_catalog, augmentation, branch_and_bound, hill_climb_lower_bound };

enum class MatchTag { matches_f, matches_f_plus_one, matches_neither, not_computed };

// Work budgets are deterministic node counts, never wall-clock: budget_ms
// converts at this nominal rate so equal inputs always do equal work.
inline constexpr std::uint64_t nodes_per_ms = 1000;
inline constexpr std::uint64_t no_budget = ~0ULL;

// A search hit its node budget before finishing.
struct budget_exhausted : capability_error {
  using capability_error::capability_error;
};

struct SearchLimits {
  static constexpr int exhaustive_catalog_max = 8;
  static constexpr int augmentation_max = 10;
  static constexpr int branch_and_bound_max = 12;
  static constexpr int hill_climb_max = Graph::max_vertices;
  static constexpr int catalog_max = 9;
};

// At most this many witness strings are kept in a report; witness_count
// carries the full number.
inline constexpr int max_report_witnesses = 64;

struct SearchReport {
  SearchReport(int n_, PatternSpec pattern_, SearchMethod method_)
      : n(n_), pattern(std::move(pattern_)), method(method_) {}

  int n;
  PatternSpec pattern;
  long long turan_value = 0;
  std::vector<std::string> witnesses;  // canonical graph6, sorted, maybe truncated
  long long witness_count = 0;
  SearchMethod method;
  std::uint64_t nodes_explored = 0;
  long long elapsed_ms = 0;  // always 0: reports carry no wall-clock state
};

struct VerificationRow {
  int n = 0;
  int k = 0;
  std::optional<long long> brute_force;
  long long f_val = 0;
  long long f_plus_one = 0;
  long long construction_edges = 0;
  MatchTag match_tag = MatchTag::not_computed;
};

struct SearchOptions {
  std::uint64_t seed = 0;
  int restarts = 0;
  std::uint64_t node_budget = no_budget;
};

// All graphs on n vertices up to isomorphism as canonical graph6 strings,
// sorted by (edge count, string).  Generated once per process and cached.
const std::vector<std::string>& graph_catalog(int n);

// Exact maximum edge count over pattern-free graphs on n vertices, plus the
// extremal graphs.  Methods: exhaustive_catalog filters the catalog (n <= 8);
// augmentation grows free graphs edge by edge with isomorph rejection
// (n <= 10, complete witness sets); branch_and_bound decides each vertex
// pair with an admissible bound (n <= 12, one witness).  Every pattern
// member needs at least one edge.
SearchReport turan_number(int n, const PatternSpec& pattern, SearchMethod method,
                          const SearchOptions& options = {});

// Every canonical pattern-free graph on n vertices with at least min_edges
// edges, exactly once, in (edge count, graph6) order.  No pattern means
// unconstrained.  n <= 10.
void enumerate_free_graphs(int n, const std::optional<PatternSpec>& pattern, int min_edges,
                           const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate_free_graphs(int n, const std::optional<PatternSpec>& pattern,
                                         int min_edges);

// Seeded randomized lower bound: start from the best known construction for
// the pattern, greedily add edges in shuffled order, perturb and refill.
// restarts = 0 returns the seed construction untouched.
SearchReport lower_bound_hill_climb(int n, const PatternSpec& pattern, int restarts,
                                    std::uint64_t seed);

// One row per n: exact value by the cheapest capable method while the budget
// lasts, the two-sided formula values, and the construction's edge count.
std::vector<VerificationRow> verify_theorem(int k, int n_from, int n_to, long long budget_ms);

// One row per n against Family{star(k+1), path(2k-1)}: f_val column holds
// floor((k-1)*n/2), construction_edges the direct construction where
// feasible.
std::vector<VerificationRow> verify_proposition21(int k, int n_from, int n_to);

}  // namespace turan
