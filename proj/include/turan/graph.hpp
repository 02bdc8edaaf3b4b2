#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace turan {

// Simple undirected graph on at most 64 vertices.  Adjacency is one 64-bit
// row per vertex, which keeps neighborhood intersections and subset tests a
// single AND.  Values are immutable: mutators return a modified copy.
class Graph {
public:
  static constexpr int max_vertices = 64;

  Graph() = default;

  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept;
  bool has_edge(int u, int v) const;
  int degree(int v) const;

  // Bit i set iff {v, i} is an edge.
  std::uint64_t neighbors(int v) const;

  // Low n bits set.
  std::uint64_t vertex_mask() const noexcept;

  // All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const;
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::array<std::uint64_t, max_vertices> adj_{};
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus all edges between the two sides.
Graph join(const Graph& g, const Graph& h);

// position_to_old[i] is the input vertex that becomes vertex i of the result.
// Must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& position_to_old);

Graph path_graph(int k);              // k >= 1 vertices, k-1 edges
Graph cycle_graph(int k);             // k >= 3
Graph star_graph(int k);              // k >= 1 vertices: one hub, k-1 leaves
Graph complete_graph(int n);          // n >= 0
Graph complete_bipartite(int a, int b);
Graph matching_graph(int k);          // k >= 0 vertices, floor(k/2) disjoint edges
Graph wheel_graph(int k);             // k >= 4: a hub joined to a (k-1)-cycle
Graph fan_graph(int m);               // m >= 2: a hub joined to a path on m vertices
Graph turan_graph(int n, int p);      // complete multipartite, p near-equal parts
Graph petersen_graph();

// Edge count of turan_graph(n, p) without building it.
long long turan_edge_count(long long n, long long p);

struct DegreeProfile {
  std::vector<int> degrees;  // ascending
  int min_degree = 0;
  int max_degree = 0;
  int edge_count = 0;
};

DegreeProfile degree_profile(const Graph& g);

// Size of a maximum matching.
int matching_number(const Graph& g);

}  // namespace turan
