#include "turan/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "turan/errors.hpp"
#include "turan/pattern.hpp"

namespace turan {

namespace {

long long split_value(int n, int k, int n0) {
  const long long a = n0;
  const long long b = n - n0;
  return a * b + static_cast<long long>(k - 1) * a / 2 + 1;
}

void check_f_domain(int n, int k) {
  if (n < 4) throw argument_error("f is defined for n >= 4, got " + std::to_string(n));
  if (k < 1) throw argument_error("f is defined for k >= 1, got " + std::to_string(k));
}

}  // namespace

SplitChoice best_split(int n, int k) {
  check_f_domain(n, k);
  SplitChoice best{0, 0, -1};
  for (int n0 = 1; n0 <= n - 1; ++n0) {
    const long long v = split_value(n, k, n0);
    if (v >= best.value) best = SplitChoice{n0, n - n0, v};
  }
  return best;
}

long long f_value(int n, int k) {
  const SplitChoice loop_best = best_split(n, k);
  // The quadratic n0*(n-n0) + (k-1)*n0/2 peaks where its real relaxation
  // does; the floor only ever moves the argmax to one of the two integers
  // around (2n+k-1)/4.  Both evaluations must agree or something is broken.
  long long closed = -1;
  const int mid = 2 * n + k - 1;
  for (int cand : {mid / 4, mid / 4 + (mid % 4 ? 1 : 0)}) {
    const int n0 = std::clamp(cand, 1, n - 1);
    closed = std::max(closed, split_value(n, k, n0));
  }
  if (closed != loop_best.value) {
    throw validation_error("split maximization mismatch: loop found " +
                           std::to_string(loop_best.value) + ", closed form found " +
                           std::to_string(closed) + " at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  return loop_best.value;
}

std::optional<std::vector<int>> feasible_component_partition(int n, int k) {
  if (k < 2) throw argument_error("component layouts need k >= 2, got " + std::to_string(k));
  if (n < 1) throw argument_error("component layouts need n >= 1, got " + std::to_string(n));

  // Regular components: k <= c <= 2k-2 with (k-1)*c even.  One deficient
  // component (a single vertex of degree k-2) is required exactly when
  // (k-1)*n is odd, possible only for k even; it has odd size in
  // [k+1, 2k-3], except k=2 where it degenerates to an isolated vertex.
  std::vector<int> regular_sizes;
  for (int c = 2 * k - 2; c >= k; --c) {
    if ((static_cast<long long>(k - 1) * c) % 2 == 0) regular_sizes.push_back(c);
  }
  std::vector<int> deficient_sizes;
  if (k == 2) {
    deficient_sizes.push_back(1);
  } else if (k % 2 == 0) {
    for (int c = 2 * k - 3; c >= k + 1; c -= 2) deficient_sizes.push_back(c);
  }
  const bool need_deficient = (static_cast<long long>(k - 1) * n) % 2 != 0;

  std::map<std::pair<int, bool>, bool> memo;
  auto feasible = [&](auto&& self, int rem, bool deficient_left) -> bool {
    if (rem == 0) return !deficient_left;
    const auto key = std::make_pair(rem, deficient_left);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    for (int c : regular_sizes) {
      if (c <= rem && self(self, rem - c, deficient_left)) {
        ok = true;
        break;
      }
    }
    if (!ok && deficient_left) {
      for (int c : deficient_sizes) {
        if (c <= rem && self(self, rem - c, false)) {
          ok = true;
          break;
        }
      }
    }
    memo[key] = ok;
    return ok;
  };

  if (!feasible(feasible, n, need_deficient)) return std::nullopt;

  // Greedy reconstruction, largest component first.
  std::vector<int> sizes;
  int rem = n;
  bool deficient_left = need_deficient;
  while (rem > 0) {
    int pick = -1;
    bool pick_deficient = false;
    for (int c : regular_sizes) {
      if (c <= rem && feasible(feasible, rem - c, deficient_left) && c > pick) {
        pick = c;
        pick_deficient = false;
      }
    }
    if (deficient_left) {
      for (int c : deficient_sizes) {
        if (c <= rem && feasible(feasible, rem - c, false) && c > pick) {
          pick = c;
          pick_deficient = true;
        }
      }
    }
    if (pick < 0) return std::nullopt;  // unreachable: feasibility was established
    sizes.push_back(pick);
    rem -= pick;
    if (pick_deficient) deficient_left = false;
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

namespace {

// One component: degree k-1 everywhere, except one vertex of degree k-2 when
// deficient.  Circulant layouts; every caller validates the result.
Graph component_graph(int c, int k, bool deficient) {
  if (!deficient) {
    if (c == k) return complete_graph(k);
    Graph g = Graph::empty(c);
    const int m = k - 1;
    for (int off = 1; off <= m / 2; ++off) {
      for (int v = 0; v < c; ++v) g = g.with_edge(v, (v + off) % c);
    }
    if (m % 2) {
      // c is even here (parity constraint), so the antipodal offset adds
      // exactly one edge per vertex.
      for (int v = 0; v < c / 2; ++v) g = g.with_edge(v, v + c / 2);
    }
    return g;
  }
  if (c == 1) return Graph::empty(1);
  // k even, c odd: circulant of even degree k-2, plus a near-perfect
  // matching at circular distance (c-1)/2, leaving vertex (c-1)/2 deficient.
  Graph g = Graph::empty(c);
  for (int off = 1; off <= (k - 2) / 2; ++off) {
    for (int v = 0; v < c; ++v) g = g.with_edge(v, (v + off) % c);
  }
  for (int i = 0; i + 1 <= (c - 1) / 2; ++i) g = g.with_edge(i, i + (c + 1) / 2);
  return g;
}

// Backtracking realizer for the per-component degree sequence; the safety
// net behind the circulant layouts.
std::optional<Graph> realize_degrees(int c, const std::vector<int>& target) {
  struct Search {
    int c;
    const std::vector<int>& target;
    Graph g;
    std::vector<int> deg;

    explicit Search(int n, const std::vector<int>& t) : c(n), target(t), g(Graph::empty(n)),
                                                        deg(n, 0) {}

    bool place(int u, int v) {
      if (v == c) {
        if (deg[u] != target[u]) return false;
        ++u;
        v = u + 1;
        if (u >= c - 1) {
          for (int w = u; w < c; ++w) {
            if (deg[w] != target[w]) return false;
          }
          return true;
        }
      }
      // Try the edge present, then absent.
      if (deg[u] < target[u] && deg[v] < target[v]) {
        g = g.with_edge(u, v);
        ++deg[u];
        ++deg[v];
        if (place(u, v + 1)) return true;
        g = g.without_edge(u, v);
        --deg[u];
        --deg[v];
      }
      return place(u, v + 1);
    }
  };
  Search search(c, target);
  if (c <= 1) return search.g;
  if (search.place(0, 1)) return search.g;
  return std::nullopt;
}

bool component_degrees_ok(const Graph& g, int k, bool deficient) {
  const int c = g.vertex_count();
  int low = 0;
  for (int v = 0; v < c; ++v) {
    const int d = g.degree(v);
    if (c == 1 && deficient) {
      if (d != 0) return false;
      continue;
    }
    if (d == k - 2 && deficient) {
      ++low;
    } else if (d != k - 1) {
      return false;
    }
  }
  return deficient ? (c == 1 || low == 1) : true;
}

}  // namespace

Construction build_regular_pfree(int n, int k) {
  if (k < 2) throw argument_error("the recipe needs k >= 2, got " + std::to_string(k));
  if (n < 1) throw argument_error("the recipe needs n >= 1, got " + std::to_string(n));
  if (n > Graph::max_vertices) {
    throw argument_error("graphs are limited to " + std::to_string(Graph::max_vertices) +
                         " vertices, got " + std::to_string(n));
  }
  auto sizes = feasible_component_partition(n, k);
  if (!sizes) {
    throw argument_error("no feasible component layout for n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  }
  const bool need_deficient = (static_cast<long long>(k - 1) * n) % 2 != 0;
  // The deficient component is the one with odd size * (k-1); at most one
  // exists by construction of the partition.
  Graph g = Graph::empty(0);
  bool deficient_used = false;
  for (int c : *sizes) {
    const bool deficient =
        need_deficient && !deficient_used && (static_cast<long long>(k - 1) * c) % 2 != 0;
    Graph comp = component_graph(c, k, deficient);
    if (!component_degrees_ok(comp, k, deficient)) {
      std::vector<int> target(c, k - 1);
      if (deficient) target[c - 1] = k - 2;
      auto fixed = realize_degrees(c, target);
      if (!fixed || !component_degrees_ok(*fixed, k, deficient)) {
        throw validation_error("component on " + std::to_string(c) +
                               " vertices failed degree validation for k=" + std::to_string(k));
      }
      comp = *fixed;
    }
    deficient_used = deficient_used || deficient;
    g = disjoint_union(g, comp);
  }

  const long long want_edges = static_cast<long long>(k - 1) * n / 2;
  if (g.edge_count() != want_edges) {
    throw validation_error("edge count " + std::to_string(g.edge_count()) + " != " +
                           std::to_string(want_edges) + " for n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  }
  // Components are capped at 2k-2 vertices, so a path on 2k-1 vertices
  // cannot fit; the detector re-checks where the pattern cap allows.
  if (2 * k - 1 <= 16 && !is_free(g, PatternSpec::path(2 * k - 1))) {
    throw validation_error("construction contains a path on " + std::to_string(2 * k - 1) +
                           " vertices");
  }

  Construction out{g, ConstructionRecipe{}};
  out.recipe.kind = RecipeKind::u_family;
  out.recipe.n = n;
  out.recipe.k = k;
  out.recipe.component_sizes = *sizes;
  return out;
}

std::optional<SplitChoice> best_feasible_split(int n, int k) {
  check_f_domain(n, k);
  if (k < 2) throw argument_error("splits need k >= 2, got " + std::to_string(k));
  std::optional<SplitChoice> best;
  for (int n0 = 1; n0 <= n - 1; ++n0) {
    const int n1 = n - n0;
    if (n0 < n1 || n1 < 2) continue;
    if (!feasible_component_partition(n0, k)) continue;
    const long long v = split_value(n, k, n0);
    if (!best || v >= best->value) best = SplitChoice{n0, n1, v};
  }
  return best;
}

Construction build_extremal_family(int n, int k) {
  if (k < 3) {
    throw argument_error(
        "the two-sided recipe needs k >= 3; for k = 2 the extremal graphs have a different "
        "shape and only exact search produces them");
  }
  const long long target = f_value(n, k);
  // Among the splits attaining the maximum, take the largest feasible n0.
  int chosen = -1;
  for (int n0 = 1; n0 <= n - 1; ++n0) {
    const int n1 = n - n0;
    if (split_value(n, k, n0) != target) continue;
    if (n0 < n1 || n1 < 2) continue;
    if (!feasible_component_partition(n0, k)) continue;
    chosen = n0;
  }
  if (chosen < 0) {
    throw argument_error("no optimal split is feasible for n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  }
  const int n0 = chosen;
  const int n1 = n - chosen;
  Construction inner = build_regular_pfree(n0, k);
  Graph g = join(inner.graph, Graph::empty(n1));
  g = g.with_edge(n0, n0 + 1);

  if (g.edge_count() != target) {
    throw validation_error("two-sided construction has " + std::to_string(g.edge_count()) +
                           " edges, expected " + std::to_string(target));
  }
  if (2 * k + 1 <= 16 && n <= 40 && !is_free(g, PatternSpec::wheel(2 * k + 1))) {
    throw validation_error("two-sided construction contains a wheel on " +
                           std::to_string(2 * k + 1) + " vertices");
  }

  Construction out{g, ConstructionRecipe{}};
  out.recipe.kind = RecipeKind::k_family;
  out.recipe.n = n;
  out.recipe.k = k;
  out.recipe.split = SplitChoice{n0, n1, target};
  out.recipe.component_sizes = inner.recipe.component_sizes;
  out.recipe.embedded_edge = std::make_pair(n0, n0 + 1);
  return out;
}

}  // namespace turan
