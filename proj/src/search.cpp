#include "turan/search.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

struct NodeCounter {
  std::uint64_t cap = no_budget;
  std::uint64_t count = 0;

  void tick() {
    if (++count > cap) {
      throw budget_exhausted("node budget of " + std::to_string(cap) + " exhausted");
    }
  }
};

void check_search_pattern(const PatternSpec& pattern) {
  auto needs_edge = [](const PatternSpec& single) {
    if (single.graph().edge_count() < 1) {
      throw argument_error(
          "extremal search needs every pattern member to have at least one edge; an edgeless "
          "member leaves no free graphs at all");
    }
  };
  if (pattern.kind() == PatternKind::family) {
    for (const auto& member : pattern.members()) needs_edge(member);
  } else {
    needs_edge(pattern);
  }
}

// Last edge of g in graph6 stream order (column-major upper triangle).
std::pair<int, int> last_stream_edge(const Graph& g) {
  for (int j = g.vertex_count() - 1; j >= 1; --j) {
    for (int i = j - 1; i >= 0; --i) {
      if (g.has_edge(i, j)) return {i, j};
    }
  }
  throw validation_error("asked for the last edge of an edgeless graph");
}

// Level-by-level canonical generation of pattern-free graphs: every free
// graph with e+1 edges is generated from its canonical parent (the graph
// minus its canonically-last edge), which is itself free because freeness
// survives edge deletion.  level_done sees each completed level in sorted
// order.
void augmentation_levels(int n, const PatternSpec* pattern, NodeCounter& nodes,
                         const std::function<void(int, const std::vector<std::string>&)>& level_done) {
  const Graph start = Graph::empty(n);
  if (pattern && !is_free(start, *pattern)) return;
  std::vector<std::string> level{canonical_form(start).bytes};
  int edges = 0;
  for (;;) {
    level_done(edges, level);
    std::vector<std::string> next;
    std::unordered_set<std::string> seen;
    for (const std::string& s : level) {
      const Graph g = decode_graph6(s);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          nodes.tick();
          const Graph h = g.with_edge(u, v);
          if (pattern && !is_free(h, *pattern)) continue;
          const auto labels = canonical_labeling(h);
          const std::string hs = encode_graph6(relabel(h, labels));
          if (seen.count(hs)) continue;
          const auto [ci, cj] = last_stream_edge(decode_graph6(hs));
          const Graph parent = h.without_edge(labels[ci], labels[cj]);
          if (canonical_form(parent).bytes != s) continue;
          seen.insert(hs);
          next.push_back(hs);
        }
      }
    }
    if (next.empty()) return;
    std::sort(next.begin(), next.end());
    level = std::move(next);
    ++edges;
  }
}

void finalize_witnesses(SearchReport& report, std::vector<std::string> witnesses) {
  std::sort(witnesses.begin(), witnesses.end());
  report.witness_count = static_cast<long long>(witnesses.size());
  if (witnesses.size() > static_cast<std::size_t>(max_report_witnesses)) {
    witnesses.resize(max_report_witnesses);
  }
  report.witnesses = std::move(witnesses);
}

void run_exhaustive_catalog(SearchReport& report, const PatternSpec& pattern, NodeCounter& nodes) {
  long long best = -1;
  std::vector<std::string> witnesses;
  for (const std::string& s : graph_catalog(report.n)) {
    nodes.tick();
    const Graph g = decode_graph6(s);
    if (!is_free(g, pattern)) continue;
    const long long e = g.edge_count();
    if (e > best) {
      best = e;
      witnesses.clear();
    }
    if (e == best) witnesses.push_back(s);
  }
  report.turan_value = best;
  finalize_witnesses(report, std::move(witnesses));
}

void run_augmentation(SearchReport& report, const PatternSpec& pattern, NodeCounter& nodes) {
  long long best = -1;
  std::vector<std::string> witnesses;
  augmentation_levels(report.n, &pattern, nodes,
                      [&](int edges, const std::vector<std::string>& level) {
                        best = edges;
                        witnesses = level;
                      });
  report.turan_value = best;
  finalize_witnesses(report, std::move(witnesses));
}

struct BranchAndBound {
  int n;
  const PatternSpec& pattern;
  NodeCounter& nodes;
  std::vector<std::pair<int, int>> slots;
  long long best = -1;
  Graph best_graph;

  BranchAndBound(int n_, const PatternSpec& pattern_, NodeCounter& nodes_)
      : n(n_), pattern(pattern_), nodes(nodes_) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
  }

  void run() {
    // Greedy incumbent: accept each slot unless it completes a copy.
    Graph g = Graph::empty(n);
    for (auto [u, v] : slots) {
      const Graph h = g.with_edge(u, v);
      if (!contains_subgraph_using_edge(h, pattern, u, v)) g = h;
    }
    best = g.edge_count();
    best_graph = g;
    descend(Graph::empty(n), 0, 0);
  }

  void descend(const Graph& g, std::size_t idx, long long included) {
    nodes.tick();
    if (included + static_cast<long long>(slots.size() - idx) <= best) return;
    if (idx == slots.size()) {
      best = included;
      best_graph = g;
      return;
    }
    const auto [u, v] = slots[idx];
    const Graph h = g.with_edge(u, v);
    if (!contains_subgraph_using_edge(h, pattern, u, v)) descend(h, idx + 1, included + 1);
    descend(g, idx + 1, included);
  }
};

void run_branch_and_bound(SearchReport& report, const PatternSpec& pattern, NodeCounter& nodes) {
  BranchAndBound search(report.n, pattern, nodes);
  search.run();
  report.turan_value = search.best;
  finalize_witnesses(report, {canonical_form(search.best_graph).bytes});
}

// Platform-stable randomness: mt19937_64 is fully specified by the standard,
// and modulo reduction avoids the implementation-defined distributions.
struct DeterministicRng {
  std::mt19937_64 engine;

  explicit DeterministicRng(std::uint64_t seed) : engine(seed) {}

  std::size_t below(std::size_t bound) { return engine() % bound; }
};

Graph greedy_fill(Graph g, const PatternSpec& pattern, DeterministicRng& rng, NodeCounter& nodes) {
  std::vector<std::pair<int, int>> gaps;
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) gaps.emplace_back(u, v);
    }
  }
  for (std::size_t i = gaps.size(); i > 1; --i) std::swap(gaps[i - 1], gaps[rng.below(i)]);
  // One pass suffices: an addition rejected once stays rejected, since
  // copies survive in every supergraph.
  for (auto [u, v] : gaps) {
    nodes.tick();
    const Graph h = g.with_edge(u, v);
    if (is_free(h, pattern)) g = h;
  }
  return g;
}

Graph hill_seed(int n, const PatternSpec& pattern) {
  if (pattern.kind() == PatternKind::wheel) {
    const int size = pattern.size();
    if (size % 2 == 1 && size >= 7) {
      try {
        return build_extremal_family(n, (size - 1) / 2).graph;
      } catch (const argument_error&) {
      }
    }
  }
  if (pattern.kind() == PatternKind::clique && pattern.size() >= 2) {
    return turan_graph(n, pattern.size() - 1);
  }
  return Graph::empty(n);
}

SearchMethod exact_method_for(int n) {
  if (n <= SearchLimits::exhaustive_catalog_max) return SearchMethod::exhaustive_catalog;
  if (n <= SearchLimits::augmentation_max) return SearchMethod::augmentation;
  return SearchMethod::branch_and_bound;
}

MatchTag tag_for(const VerificationRow& row) {
  if (!row.brute_force) return MatchTag::not_computed;
  if (*row.brute_force == row.f_val) return MatchTag::matches_f;
  if (*row.brute_force == row.f_plus_one) return MatchTag::matches_f_plus_one;
  return MatchTag::matches_neither;
}

}  // namespace

SearchReport turan_number(int n, const PatternSpec& pattern, SearchMethod method,
                          const SearchOptions& options) {
  if (n < 1) throw argument_error("extremal search needs n >= 1, got " + std::to_string(n));
  check_search_pattern(pattern);
  const auto check_limit = [n](int cap, const char* name) {
    if (n > cap) {
      throw capability_error(std::string(name) + " search is limited to " + std::to_string(cap) +
                             " vertices, got " + std::to_string(n));
    }
  };
  SearchReport report(n, pattern, method);
  NodeCounter nodes{options.node_budget};
  switch (method) {
    case SearchMethod::exhaustive_catalog:
      check_limit(SearchLimits::exhaustive_catalog_max, "exhaustive catalog");
      run_exhaustive_catalog(report, pattern, nodes);
      break;
    case SearchMethod::augmentation:
      check_limit(SearchLimits::augmentation_max, "augmentation");
      run_augmentation(report, pattern, nodes);
      break;
    case SearchMethod::branch_and_bound:
      check_limit(SearchLimits::branch_and_bound_max, "branch and bound");
      run_branch_and_bound(report, pattern, nodes);
      break;
    case SearchMethod::hill_climb_lower_bound:
      throw argument_error(
          "hill climbing is a lower bound, not an exact method; call lower_bound_hill_climb");
  }
  report.nodes_explored = nodes.count;
  return report;
}

void enumerate_free_graphs(int n, const std::optional<PatternSpec>& pattern, int min_edges,
                           const std::function<void(const Graph&)>& emit) {
  if (n < 1) throw argument_error("enumeration needs n >= 1, got " + std::to_string(n));
  if (n > SearchLimits::augmentation_max) {
    throw capability_error("enumeration is limited to " +
                           std::to_string(SearchLimits::augmentation_max) + " vertices, got " +
                           std::to_string(n));
  }
  if (pattern) check_search_pattern(*pattern);
  NodeCounter nodes;
  augmentation_levels(n, pattern ? &*pattern : nullptr, nodes,
                      [&](int edges, const std::vector<std::string>& level) {
                        if (edges < min_edges) return;
                        for (const std::string& s : level) emit(decode_graph6(s));
                      });
}

std::vector<Graph> enumerate_free_graphs(int n, const std::optional<PatternSpec>& pattern,
                                         int min_edges) {
  std::vector<Graph> out;
  enumerate_free_graphs(n, pattern, min_edges, [&](const Graph& g) { out.push_back(g); });
  return out;
}

SearchReport lower_bound_hill_climb(int n, const PatternSpec& pattern, int restarts,
                                    std::uint64_t seed) {
  if (n < 1 || n > SearchLimits::hill_climb_max) {
    throw argument_error("hill climbing needs 1 <= n <= " +
                         std::to_string(SearchLimits::hill_climb_max) + ", got " +
                         std::to_string(n));
  }
  if (restarts < 0) throw argument_error("restarts must be nonnegative");
  check_search_pattern(pattern);

  SearchReport report(n, pattern, SearchMethod::hill_climb_lower_bound);
  NodeCounter nodes;
  Graph seed_graph = hill_seed(n, pattern);
  Graph best = seed_graph;
  if (restarts > 0) {
    nodes.tick();
    if (!is_free(seed_graph, pattern)) {
      seed_graph = Graph::empty(n);
      best = seed_graph;
    }
    for (int r = 1; r <= restarts; ++r) {
      DeterministicRng rng(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r));
      Graph g = greedy_fill(seed_graph, pattern, rng, nodes);
      for (int round = 0; round < 8; ++round) {
        const auto edges = g.edges();
        if (edges.empty()) break;
        const auto [u, v] = edges[rng.below(edges.size())];
        const Graph h = greedy_fill(g.without_edge(u, v), pattern, rng, nodes);
        if (h.edge_count() > g.edge_count()) g = h;
      }
      if (g.edge_count() > best.edge_count()) best = g;
    }
  }
  report.turan_value = best.edge_count();
  const std::string bytes = n <= default_canonical_limit ? canonical_form(best).bytes
                                                         : encode_graph6(best);
  finalize_witnesses(report, {bytes});
  report.nodes_explored = nodes.count;
  return report;
}

std::vector<VerificationRow> verify_theorem(int k, int n_from, int n_to, long long budget_ms) {
  if (k < 2) throw argument_error("the sweep needs k >= 2, got " + std::to_string(k));
  if (n_from < 4) throw argument_error("rows need n >= 4, got " + std::to_string(n_from));
  if (n_from > n_to) throw argument_error("empty range");
  if (budget_ms < 0) throw argument_error("budget must be nonnegative");

  const std::uint64_t cap_ms = no_budget / nodes_per_ms;
  std::uint64_t remaining = static_cast<std::uint64_t>(budget_ms) >= cap_ms
                                ? no_budget
                                : static_cast<std::uint64_t>(budget_ms) * nodes_per_ms;
  std::optional<PatternSpec> wheel;
  if (2 * k + 1 <= 16) wheel = PatternSpec::wheel(2 * k + 1);

  std::vector<VerificationRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    VerificationRow row;
    row.n = n;
    row.k = k;
    row.f_val = f_value(n, k);
    row.f_plus_one = row.f_val + 1;
    if (k == 2) {
      // No two-sided recipe exists at k=2; the sweep reports the closed-form
      // value instead of a built graph's edge count.
      row.construction_edges = static_cast<long long>((n + 1) / 2 + 1) * (n / 2);
    } else {
      try {
        row.construction_edges = build_extremal_family(n, k).graph.edge_count();
      } catch (const argument_error&) {
        const auto split = best_feasible_split(n, k);
        row.construction_edges = split ? split->value : 0;
      }
    }
    if (wheel && n <= SearchLimits::branch_and_bound_max && remaining > 0) {
      SearchOptions options;
      options.node_budget = remaining;
      try {
        const SearchReport rep = turan_number(n, *wheel, exact_method_for(n), options);
        row.brute_force = rep.turan_value;
        remaining -= rep.nodes_explored;
      } catch (const budget_exhausted&) {
        remaining = 0;
      }
    }
    row.match_tag = tag_for(row);
    rows.push_back(row);
  }
  return rows;
}

std::vector<VerificationRow> verify_proposition21(int k, int n_from, int n_to) {
  if (k < 2) throw argument_error("the sweep needs k >= 2, got " + std::to_string(k));
  if (2 * k - 1 > 16) {
    throw capability_error("path patterns are limited to 16 vertices, so k <= 8; got k = " +
                           std::to_string(k));
  }
  if (n_from < 1) throw argument_error("rows need n >= 1, got " + std::to_string(n_from));
  if (n_from > n_to) throw argument_error("empty range");
  if (n_to > SearchLimits::branch_and_bound_max) {
    throw capability_error("exact values stop at " +
                           std::to_string(SearchLimits::branch_and_bound_max) +
                           " vertices, got " + std::to_string(n_to));
  }

  const PatternSpec forbidden =
      PatternSpec::family({PatternSpec::star(k + 1), PatternSpec::path(2 * k - 1)});
  std::vector<VerificationRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    VerificationRow row;
    row.n = n;
    row.k = k;
    row.f_val = static_cast<long long>(k - 1) * n / 2;
    row.f_plus_one = row.f_val + 1;
    try {
      row.construction_edges = build_regular_pfree(n, k).graph.edge_count();
    } catch (const argument_error&) {
      row.construction_edges = 0;
    }
    const SearchReport rep = turan_number(n, forbidden, exact_method_for(n));
    row.brute_force = rep.turan_value;
    row.match_tag = tag_for(row);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace turan
