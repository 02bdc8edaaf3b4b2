#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/search.hpp"

namespace turan {

namespace {

// Grow the (n-1)-vertex catalog by one vertex attached in every possible
// way, deduplicating by canonical form.  Complete because deleting a vertex
// of any n-vertex graph leaves an (n-1)-vertex graph.
std::vector<std::string> build_level(int n, const std::vector<std::string>& smaller) {
  std::unordered_set<std::string> seen;
  for (const std::string& s : smaller) {
    const Graph g = decode_graph6(s);
    const std::uint64_t subsets = 1ULL << (n - 1);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Graph h = Graph::empty(n);
      for (auto [u, v] : g.edges()) h = h.with_edge(u, v);
      for (int v = 0; v < n - 1; ++v) {
        if ((mask >> v) & 1ULL) h = h.with_edge(v, n - 1);
      }
      seen.insert(canonical_form(h).bytes);
    }
  }
  std::vector<std::pair<int, std::string>> keyed;
  keyed.reserve(seen.size());
  for (const std::string& s : seen) keyed.emplace_back(decode_graph6(s).edge_count(), s);
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [edges, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace

const std::vector<std::string>& graph_catalog(int n) {
  if (n < 0) throw argument_error("catalog needs a nonnegative vertex count");
  if (n > SearchLimits::catalog_max) {
    throw capability_error("the graph catalog is limited to " +
                           std::to_string(SearchLimits::catalog_max) + " vertices, got " +
                           std::to_string(n));
  }
  static std::mutex lock;
  static std::map<int, std::vector<std::string>> cache;
  std::scoped_lock guard(lock);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  for (int m = 0; m <= n; ++m) {
    if (cache.count(m)) continue;
    if (m == 0) {
      cache[0] = {encode_graph6(Graph::empty(0))};
    } else {
      cache[m] = build_level(m, cache[m - 1]);
    }
  }
  return cache[n];
}

}  // namespace turan
