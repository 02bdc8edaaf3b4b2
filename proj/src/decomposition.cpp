#include "turan/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"

namespace turan {

namespace {

int max_clique_size(const Graph& g) {
  int best = 0;
  std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t candidates, int size) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = size;
      return;
    }
    const int v = std::countr_zero(candidates);
    grow(candidates & g.neighbors(v), size + 1);
    grow(candidates & (candidates - 1), size);
  };
  grow(g.vertex_mask(), 0);
  return best;
}

std::vector<int> descending_degree_order(const Graph& g) {
  std::vector<int> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

int greedy_color_count(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(g.vertex_count(), -1);
  int used = 0;
  for (int v : order) {
    std::uint32_t taken = 0;
    for (int u : order) {
      if (color[u] >= 0 && g.has_edge(u, v)) taken |= 1u << color[u];
    }
    const int c = std::countr_one(taken);
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

bool color_rest(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
                std::size_t pos, int used, int k) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  // Colors beyond the first unused one are interchangeable, so try only one.
  const int limit = std::min(used + 1, k);
  for (int c = 0; c < limit; ++c) {
    bool clash = false;
    for (std::size_t i = 0; i < pos && !clash; ++i) {
      clash = color[order[i]] == c && g.has_edge(order[i], v);
    }
    if (clash) continue;
    color[v] = c;
    if (color_rest(g, order, color, pos + 1, std::max(used, c + 1), k)) return true;
    color[v] = -1;
  }
  return false;
}

Graph drop_isolated(const Graph& g) {
  std::vector<int> new_of(g.vertex_count(), -1);
  int kept = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) new_of[v] = kept++;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(new_of[u], new_of[v]);
  return Graph::from_edges(kept, edges);
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.vertex_count();
  if (n > max_chromatic_vertices) {
    throw capability_error("chromatic number is limited to " +
                           std::to_string(max_chromatic_vertices) + " vertices, got " +
                           std::to_string(n));
  }
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const std::vector<int> order = descending_degree_order(g);
  const int upper = greedy_color_count(g, order);
  for (int k = max_clique_size(g); k < upper; ++k) {
    std::vector<int> color(n, -1);
    if (color_rest(g, order, color, 0, 0, k)) return k;
  }
  return upper;
}

int subchromatic(const std::vector<Graph>& family) {
  if (family.empty()) throw argument_error("subchromatic needs a nonempty family");
  int low = std::numeric_limits<int>::max();
  for (const Graph& g : family) low = std::min(low, chromatic_number(g));
  return low - 1;
}

Graph decomposition_host(const Graph& member, int t, int p) {
  if (t < 0) throw argument_error("t must be nonnegative");
  if (p < 2) {
    throw argument_error("the host needs p >= 2; smaller p leaves the joined block edgeless");
  }
  return join(disjoint_union(member, Graph::empty(t)), turan_graph(t, p - 1));
}

DecompositionResult decomposition_family(const Graph& target, std::optional<int> t) {
  const int n = target.vertex_count();
  if (n > SearchLimits::catalog_max) {
    throw capability_error("the candidate sweep is limited to targets on " +
                           std::to_string(SearchLimits::catalog_max) + " vertices, got " +
                           std::to_string(n));
  }
  const int chi = chromatic_number(target);
  if (chi <= 2) {
    throw argument_error("the target needs chromatic number at least 3, got " +
                         std::to_string(chi) + "; a bipartite target leaves the joined block "
                         "absorbing every candidate");
  }

  DecompositionResult result;
  result.source = encode_graph6(target);
  result.p = chi - 1;
  result.t_used = t.value_or(n);
  if (result.t_used < n) {
    throw argument_error("t must be at least the target's vertex count " + std::to_string(n) +
                         ", got " + std::to_string(result.t_used));
  }

  const PatternSpec target_pattern = PatternSpec::custom(target);
  std::vector<PatternSpec> members;
  for (int nv = 2; nv <= n; ++nv) {
    for (const std::string& s : graph_catalog(nv)) {
      const Graph candidate = decode_graph6(s);
      bool skip = false;
      for (int v = 0; v < nv && !skip; ++v) skip = candidate.degree(v) == 0;
      for (const PatternSpec& member : members) {
        if (skip) break;
        skip = contains_subgraph(candidate, member).has_value();
      }
      if (skip) continue;
      auto witness =
          contains_subgraph(decomposition_host(candidate, result.t_used, result.p), target_pattern);
      if (!witness) continue;
      witness->member = static_cast<int>(result.family.size());
      result.family.push_back(s);
      result.certificates.push_back(*witness);
      members.push_back(PatternSpec::custom(candidate));
    }
  }

  // Deleting any edge from a member must break the embedding; the scan order
  // already guarantees this, so a hit here means the scan is inconsistent.
  for (const std::string& s : result.family) {
    const Graph member = decode_graph6(s);
    for (auto [u, v] : member.edges()) {
      const Graph reduced = drop_isolated(member.without_edge(u, v));
      if (reduced.edge_count() == 0) continue;
      if (contains_subgraph(decomposition_host(reduced, result.t_used, result.p),
                            target_pattern)) {
        throw validation_error("family member still reaches the target after an edge deletion");
      }
    }
  }
  return result;
}

}  // namespace turan
