#include "turan/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

// Ordered partition of the vertices: a flat vertex order plus (start, length)
// per cell.  Vertex order inside a cell is meaningless until the cell is a
// singleton, but it is kept deterministic so refinement is reproducible.
struct Partition {
  std::vector<int> order;
  std::vector<std::pair<int, int>> cells;  // (start, length)
};

// Split every cell by neighbor counts into every other cell until stable.
// Buckets are emitted in ascending count order, which fixes the cell order
// canonically (counts are isomorphism-invariant).
void equitable_refine(const Graph& g, Partition& part) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t target = 0; target < part.cells.size() && !changed; ++target) {
      auto [start, len] = part.cells[target];
      if (len <= 1) continue;
      for (std::size_t splitter = 0; splitter < part.cells.size(); ++splitter) {
        auto [sstart, slen] = part.cells[splitter];
        std::uint64_t mask = 0;
        for (int idx = 0; idx < slen; ++idx) mask |= 1ULL << part.order[sstart + idx];
        std::map<int, std::vector<int>> buckets;
        for (int idx = 0; idx < len; ++idx) {
          int v = part.order[start + idx];
          buckets[std::popcount(g.neighbors(v) & mask)].push_back(v);
        }
        if (buckets.size() <= 1) continue;
        std::vector<std::pair<int, int>> new_cells;
        int at = start;
        for (auto& [count, members] : buckets) {
          new_cells.emplace_back(at, static_cast<int>(members.size()));
          for (int v : members) part.order[at++] = v;
        }
        part.cells.erase(part.cells.begin() + target);
        part.cells.insert(part.cells.begin() + target, new_cells.begin(), new_cells.end());
        changed = true;
        break;
      }
    }
  }
}

// Adjacency bits of the relabeled graph in graph6 stream order, packed so
// that lexicographic comparison of words equals comparison of bit streams.
std::vector<std::uint64_t> labeling_bits(const Graph& g, const std::vector<int>& position_to_old,
                                         int prefix) {
  std::vector<std::uint64_t> words((static_cast<std::size_t>(prefix) * (prefix - 1) / 2 + 63) / 64,
                                   0);
  std::size_t t = 0;
  for (int j = 1; j < prefix; ++j) {
    std::uint64_t row = g.neighbors(position_to_old[j]);
    for (int i = 0; i < j; ++i) {
      if ((row >> position_to_old[i]) & 1ULL) words[t >> 6] |= 1ULL << (63 - (t & 63));
      ++t;
    }
  }
  return words;
}

// -1, 0, 1 comparison of a prefix bit stream against the current best full
// stream, over the first `bits` positions.
int compare_prefix(const std::vector<std::uint64_t>& probe, const std::vector<std::uint64_t>& best,
                   std::size_t bits) {
  std::size_t full = bits / 64;
  for (std::size_t w = 0; w < full; ++w) {
    if (probe[w] != best[w]) return probe[w] < best[w] ? -1 : 1;
  }
  int rest = static_cast<int>(bits % 64);
  if (rest) {
    std::uint64_t mask = ~0ULL << (64 - rest);
    std::uint64_t a = probe[full] & mask;
    std::uint64_t b = best[full] & mask;
    if (a != b) return a < b ? -1 : 1;
  }
  return 0;
}

struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct CanonicalSearch {
  const Graph& g;
  int n;
  bool have_best = false;
  std::vector<std::uint64_t> best_bits;
  std::vector<int> best_label;
  std::vector<std::vector<int>> generators;  // automorphisms, old vertex -> old vertex

  explicit CanonicalSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  void run() {
    Partition part;
    part.order.resize(n);
    for (int i = 0; i < n; ++i) part.order[i] = i;
    if (n > 0) part.cells.emplace_back(0, n);
    std::vector<int> prefix;
    descend(std::move(part), prefix);
    if (!have_best) {
      // Only possible for the 0- or 1-vertex graph falling straight through.
      best_label.resize(n);
      for (int i = 0; i < n; ++i) best_label[i] = i;
    }
  }

  void descend(Partition part, std::vector<int>& individualized) {
    equitable_refine(g, part);
    int leading = 0;
    while (leading < static_cast<int>(part.cells.size()) && part.cells[leading].second == 1) {
      ++leading;
    }
    if (have_best && leading > 1) {
      std::size_t bits = static_cast<std::size_t>(leading) * (leading - 1) / 2;
      auto probe = labeling_bits(g, part.order, leading);
      if (compare_prefix(probe, best_bits, bits) > 0) return;
    }
    if (leading == static_cast<int>(part.cells.size())) {
      auto bits = labeling_bits(g, part.order, n);
      if (!have_best) {
        have_best = true;
        best_bits = bits;
        best_label = part.order;
      } else if (bits < best_bits) {
        best_bits = bits;
        best_label = part.order;
      } else if (bits == best_bits) {
        // Two labelings with identical adjacency streams compose to an
        // automorphism; keep it for orbit pruning.
        std::vector<int> sigma(n);
        for (int i = 0; i < n; ++i) sigma[best_label[i]] = part.order[i];
        generators.push_back(std::move(sigma));
      }
      return;
    }
    auto [start, len] = part.cells[leading];
    std::vector<int> cell(part.order.begin() + start, part.order.begin() + start + len);
    std::sort(cell.begin(), cell.end());
    std::vector<int> tried;
    for (int v : cell) {
      if (skip_by_orbit(v, tried, individualized)) continue;
      Partition child = part;
      child.order[start] = v;
      int at = start + 1;
      for (int u : cell) {
        if (u != v) child.order[at++] = u;
      }
      child.cells[leading] = {start, 1};
      child.cells.insert(child.cells.begin() + leading + 1, {start + 1, len - 1});
      individualized.push_back(v);
      descend(std::move(child), individualized);
      individualized.pop_back();
      tried.push_back(v);
    }
  }

  // Skip v when an automorphism fixing every individualized vertex maps an
  // already-tried branch target onto it: the subtrees are isomorphic.
  bool skip_by_orbit(int v, const std::vector<int>& tried, const std::vector<int>& individualized) {
    if (tried.empty() || generators.empty()) return false;
    DisjointSet orbits(n);
    for (const auto& sigma : generators) {
      bool fixes = true;
      for (int f : individualized) {
        if (sigma[f] != f) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) orbits.unite(x, sigma[x]);
    }
    int root = orbits.find(v);
    for (int u : tried) {
      if (orbits.find(u) == root) return true;
    }
    return false;
  }
};

void check_limit(const Graph& g, int limit) {
  int cap = std::min(limit, 62);
  if (g.vertex_count() > cap) {
    throw capability_error("canonical labeling limited to " + std::to_string(cap) +
                           " vertices, got " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, int limit) {
  check_limit(g, limit);
  CanonicalSearch search(g);
  search.run();
  return search.best_label;
}

Graph canonical_relabel(const Graph& g, int limit) {
  return relabel(g, canonical_labeling(g, limit));
}

CanonicalForm canonical_form(const Graph& g, int limit) {
  return CanonicalForm{encode_graph6(canonical_relabel(g, limit))};
}

bool is_isomorphic(const Graph& a, const Graph& b, int limit) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto da = degree_profile(a).degrees;
  auto db = degree_profile(b).degrees;
  if (da != db) return false;
  return canonical_form(a, limit) == canonical_form(b, limit);
}

}  // namespace turan
