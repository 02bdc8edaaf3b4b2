#include "turan/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "turan/errors.hpp"

namespace turan {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~0ULL : (1ULL << n) - 1;
}

}  // namespace

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw argument_error("vertex " + std::to_string(v) + " out of range for a graph on " +
                         std::to_string(n_) + " vertices");
  }
}

void Graph::check_pair(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw argument_error("loops are not allowed (vertex " + std::to_string(u) + ")");
  }
}

Graph Graph::empty(int n) {
  if (n < 0 || n > max_vertices) {
    throw argument_error("vertex count " + std::to_string(n) + " outside supported range 0.." +
                         std::to_string(max_vertices));
  }
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    g.check_pair(u, v);
    g.adj_[u] |= 1ULL << v;
    g.adj_[v] |= 1ULL << u;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::vector<std::pair<int, int>>(edges));
}

int Graph::edge_count() const noexcept {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  check_pair(u, v);
  return (adj_[u] >> v) & 1ULL;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::uint64_t Graph::vertex_mask() const noexcept {
  return low_bits(n_);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[u] & ~low_bits(u + 1);
    while (higher) {
      int v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  check_pair(u, v);
  Graph g = *this;
  g.adj_[u] |= 1ULL << v;
  g.adj_[v] |= 1ULL << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_pair(u, v);
  Graph g = *this;
  g.adj_[u] &= ~(1ULL << v);
  g.adj_[v] &= ~(1ULL << u);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph out = Graph::empty(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) out = out.with_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int gn = g.vertex_count();
  const int hn = h.vertex_count();
  if (gn + hn > Graph::max_vertices) {
    throw argument_error("disjoint union on " + std::to_string(gn + hn) +
                         " vertices exceeds the supported maximum of " +
                         std::to_string(Graph::max_vertices));
  }
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + gn, v + gn);
  return Graph::from_edges(gn + hn, edges);
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const int gn = g.vertex_count();
  const int hn = h.vertex_count();
  for (int u = 0; u < gn; ++u) {
    for (int v = 0; v < hn; ++v) out = out.with_edge(u, gn + v);
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& position_to_old) {
  const int n = g.vertex_count();
  if (static_cast<int>(position_to_old.size()) != n) {
    throw argument_error("relabeling has " + std::to_string(position_to_old.size()) +
                         " entries for a graph on " + std::to_string(n) + " vertices");
  }
  std::vector<int> old_to_new(n, -1);
  for (int i = 0; i < n; ++i) {
    int old = position_to_old[i];
    if (old < 0 || old >= n || old_to_new[old] != -1) {
      throw argument_error("relabeling is not a permutation of 0.." + std::to_string(n - 1));
    }
    old_to_new[old] = i;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return Graph::from_edges(n, edges);
}

Graph path_graph(int k) {
  if (k < 1) throw argument_error("a path needs at least 1 vertex, got " + std::to_string(k));
  Graph g = Graph::empty(k);
  for (int i = 0; i + 1 < k; ++i) g = g.with_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw argument_error("a cycle needs at least 3 vertices, got " + std::to_string(k));
  Graph g = path_graph(k);
  return g.with_edge(k - 1, 0);
}

Graph star_graph(int k) {
  if (k < 1) throw argument_error("a star needs at least 1 vertex, got " + std::to_string(k));
  Graph g = Graph::empty(k);
  for (int i = 1; i < k; ++i) g = g.with_edge(0, i);
  return g;
}

Graph complete_graph(int n) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g = g.with_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 0 || b < 0) throw argument_error("bipartite side sizes must be nonnegative");
  return join(Graph::empty(a), Graph::empty(b));
}

Graph matching_graph(int k) {
  if (k < 0) throw argument_error("a matching needs a nonnegative vertex count");
  Graph g = Graph::empty(k);
  for (int i = 0; i + 1 < k; i += 2) g = g.with_edge(i, i + 1);
  return g;
}

Graph wheel_graph(int k) {
  if (k < 4) throw argument_error("a wheel needs at least 4 vertices, got " + std::to_string(k));
  return join(Graph::empty(1), cycle_graph(k - 1));
}

Graph fan_graph(int m) {
  if (m < 2) throw argument_error("a fan needs a path on at least 2 vertices, got " +
                                  std::to_string(m));
  return join(Graph::empty(1), path_graph(m));
}

Graph petersen_graph() {
  Graph g = Graph::empty(10);
  for (int i = 0; i < 5; ++i) {
    g = g.with_edge(i, (i + 1) % 5);              // outer pentagon
    g = g.with_edge(i, i + 5);                    // spokes
    g = g.with_edge(5 + i, 5 + (i + 2) % 5);      // inner pentagram
  }
  return g;
}

Graph turan_graph(int n, int p) {
  if (n < 0) throw argument_error("vertex count must be nonnegative");
  if (p < 1) throw argument_error("part count must be at least 1, got " + std::to_string(p));
  Graph g = Graph::empty(n);
  // Part i covers a contiguous vertex block; the first n mod p parts take the
  // larger size.
  std::vector<int> part_of(n);
  int next = 0;
  for (int i = 0; i < p && next < n; ++i) {
    int size = n / p + (i < n % p ? 1 : 0);
    for (int j = 0; j < size; ++j) part_of[next++] = i;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) g = g.with_edge(u, v);
    }
  }
  return g;
}

long long turan_edge_count(long long n, long long p) {
  if (n < 0) throw argument_error("vertex count must be nonnegative");
  if (p < 1) throw argument_error("part count must be at least 1");
  long long total = n * (n - 1) / 2;
  long long large = n % p;
  long long small_size = n / p;
  long long inside = large * (small_size + 1) * small_size / 2 +
                     (p - large) * small_size * (small_size - 1) / 2;
  return total - inside;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  const int n = g.vertex_count();
  profile.degrees.reserve(n);
  for (int v = 0; v < n; ++v) profile.degrees.push_back(g.degree(v));
  std::sort(profile.degrees.begin(), profile.degrees.end());
  profile.min_degree = n ? profile.degrees.front() : 0;
  profile.max_degree = n ? profile.degrees.back() : 0;
  profile.edge_count = g.edge_count();
  return profile;
}

namespace {

// Blossom-shrinking augmenting path search.  match, p and base are shared
// with the caller; returns whether an augmenting path from root was applied.
struct MatchingState {
  const Graph& g;
  int n;
  std::vector<int> match, parent, base;
  std::vector<char> used, blossom;

  explicit MatchingState(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        match(n, -1),
        parent(n, -1),
        base(n, 0),
        used(n, 0),
        blossom(n, 0) {}

  int lowest_common_ancestor(int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  }

  void mark_path(int v, int until, int child) {
    while (base[v] != until) {
      blossom[base[v]] = 1;
      blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int to = 0; to < n; ++to) {
        if (!((g.neighbors(v) >> to) & 1ULL)) continue;
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          int cur = lowest_common_ancestor(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
          }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) {
            int u = to;
            while (u >= 0) {
              int pv = parent[u];
              int next = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = next;
            }
            return true;
          }
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return false;
  }
};

}  // namespace

int matching_number(const Graph& g) {
  MatchingState state(g);
  int size = 0;
  for (int v = 0; v < state.n; ++v) {
    if (state.match[v] < 0 && state.augment_from(v)) ++size;
  }
  return size;
}

}  // namespace turan
