#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "turan/constructions.hpp"
#include "turan/errors.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/pattern.hpp"
#include "turan/search.hpp"

using namespace turan;

namespace {

// Reference containment: try every injective placement of the pattern's
// vertices, checking edges as they complete.
bool placement_oracle(const Graph& host, const Graph& pat, std::vector<int>& map,
                      std::uint64_t used) {
  const int placed = static_cast<int>(map.size());
  if (placed == pat.vertex_count()) return true;
  for (int h = 0; h < host.vertex_count(); ++h) {
    if ((used >> h) & 1) continue;
    bool ok = true;
    for (int q = 0; q < placed && ok; ++q) {
      if (pat.has_edge(q, placed)) ok = host.has_edge(map[q], h);
    }
    if (!ok) continue;
    map.push_back(h);
    if (placement_oracle(host, pat, map, used | (1ULL << h))) return true;
    map.pop_back();
  }
  return false;
}

bool oracle_contains(const Graph& host, const Graph& pat) {
  std::vector<int> map;
  return placement_oracle(host, pat, map, 0);
}

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
  Graph g = Graph::empty(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) g = g.with_edge(u, v);
    }
  }
  return g;
}

}  // namespace

TEST_SUITE("pattern") {

TEST_CASE("containment hits and misses from the reference set") {
  const auto hit = contains_subgraph(wheel_graph(5), PatternSpec::wheel(5));
  REQUIRE(hit.has_value());
  CHECK(witness_is_valid(wheel_graph(5), PatternSpec::wheel(5), *hit));

  for (int k = 4; k <= 10; ++k) {
    CHECK_FALSE(contains_subgraph(petersen_graph(), PatternSpec::wheel(k)).has_value());
  }

  const auto t63 = contains_subgraph(turan_graph(6, 3), PatternSpec::wheel(5));
  REQUIRE(t63.has_value());
  CHECK(witness_is_valid(turan_graph(6, 3), PatternSpec::wheel(5), *t63));

  CHECK(contains_subgraph(complete_graph(5), PatternSpec::clique(5)).has_value());
  CHECK_FALSE(contains_subgraph(complete_graph(5), PatternSpec::clique(6)).has_value());
}

TEST_CASE("witnesses are deterministic") {
  const Graph host = turan_graph(8, 3);
  const auto a = contains_subgraph(host, PatternSpec::wheel(5));
  const auto b = contains_subgraph(host, PatternSpec::wheel(5));
  REQUIRE(a.has_value());
  CHECK(*a == *b);
}

TEST_CASE("wheel fast path on the reference set") {
  const auto w7 = contains_wheel(join(Graph::empty(1), cycle_graph(6)), 7);
  REQUIRE(w7.has_value());
  CHECK(witness_is_valid(wheel_graph(7), PatternSpec::wheel(7), *w7));

  for (int n = 4; n <= 12; ++n) {
    for (int k = 2; k <= 5; ++k) {
      CHECK_FALSE(contains_wheel(turan_graph(n, 3), 2 * k).has_value());
    }
  }

  const Graph tripartite_plus = join(complete_graph(2), matching_graph(4));
  CHECK_FALSE(contains_wheel(tripartite_plus, 5).has_value());
}

TEST_CASE("wheel fast path agrees with the generic detector on seeded graphs") {
  std::mt19937_64 rng(31337);
  for (int rep = 0; rep < 10000; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 13);
    const Graph g = random_graph(rng, n, 25 + static_cast<int>(rng() % 60));
    const int k = 4 + static_cast<int>(rng() % 7);
    const auto fast = contains_wheel(g, k);
    const auto generic = contains_subgraph(g, PatternSpec::wheel(k));
    CHECK(fast.has_value() == generic.has_value());
    if (fast) CHECK(witness_is_valid(g, PatternSpec::wheel(k), *fast));
  }
}

TEST_CASE("fixed-length cycles respect the subset") {
  const auto full = fixed_length_cycle_in_subset(cycle_graph(6), 0b111111, 6);
  REQUIRE(full.has_value());
  CHECK(full->size() == 6);
  CHECK_FALSE(fixed_length_cycle_in_subset(cycle_graph(6), 0b111111, 5).has_value());
  CHECK(fixed_length_cycle_in_subset(complete_graph(5), 0b11110, 4).has_value());
  CHECK(fixed_length_cycle_in_subset(complete_graph(5), 0b00111, 3).has_value());
  CHECK_FALSE(fixed_length_cycle_in_subset(complete_graph(5), 0b00011, 3).has_value());
  CHECK_THROWS_AS(fixed_length_cycle_in_subset(complete_graph(5), 0b11111, 2), argument_error);
}

TEST_CASE("disjoint copies from the reference set") {
  const Graph two_triangles = disjoint_union(complete_graph(3), complete_graph(3));
  const auto two_paths = find_disjoint_copies(two_triangles, PatternSpec::path(3), 2);
  REQUIRE(two_paths.has_value());
  CHECK(two_paths->size() == 2);

  CHECK(find_disjoint_copies(cycle_graph(6), PatternSpec::path(3), 2).has_value());
  CHECK_FALSE(find_disjoint_copies(cycle_graph(6), PatternSpec::path(3), 3).has_value());

  // Every edge of a star shares the hub, so even one 2-edge matching fails.
  CHECK_FALSE(find_disjoint_copies(star_graph(7), PatternSpec::matching(4), 1).has_value());
  CHECK_FALSE(find_disjoint_copies(star_graph(7), PatternSpec::matching(4), 2).has_value());

  CHECK_THROWS_AS(find_disjoint_copies(cycle_graph(6), PatternSpec::path(3), 0), argument_error);
}

TEST_CASE("one copy means plain containment") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    const Graph g = random_graph(rng, 4 + static_cast<int>(rng() % 7), 50);
    const PatternSpec pat = rep % 2 == 0 ? PatternSpec::cycle(4) : PatternSpec::star(4);
    CHECK(find_disjoint_copies(g, pat, 1).has_value() ==
          contains_subgraph(g, pat).has_value());
  }
}

TEST_CASE("freeness on the reference set") {
  for (int n0 = 1; n0 <= 8; ++n0) {
    for (int n1 = 1; n1 <= 8; ++n1) {
      for (int k = 2; k <= 3; ++k) {
        CHECK(is_free(complete_bipartite(n0, n1), PatternSpec::wheel(2 * k + 1)));
      }
    }
  }
  CHECK(is_free(matching_graph(6),
                PatternSpec::family({PatternSpec::star(3), PatternSpec::path(3)})));
  CHECK_FALSE(is_free(wheel_graph(7), PatternSpec::wheel(7)));
}

TEST_CASE("family containment reports the first member found") {
  const PatternSpec fam = PatternSpec::family({PatternSpec::clique(4), PatternSpec::cycle(5)});
  const auto in_c5 = contains_subgraph(cycle_graph(5), fam);
  REQUIRE(in_c5.has_value());
  CHECK(in_c5->member == 1);
  const auto in_k5 = contains_subgraph(complete_graph(5), fam);
  REQUIRE(in_k5.has_value());
  CHECK(in_k5->member == 0);
  CHECK(witness_is_valid(complete_graph(5), fam, *in_k5));
  CHECK_FALSE(contains_subgraph(complete_bipartite(3, 3), fam).has_value());
}

TEST_CASE("detector matches the placement oracle everywhere at desk scale") {
  std::vector<Graph> patterns;
  for (int m = 2; m <= 5; ++m) {
    for (const std::string& s : graph_catalog(m)) {
      const Graph p = decode_graph6(s);
      if (p.edge_count() >= 1) patterns.push_back(p);
    }
  }
  REQUIRE(patterns.size() == 47);
  for (int n = 0; n <= 7; ++n) {
    for (const std::string& s : graph_catalog(n)) {
      const Graph host = decode_graph6(s);
      for (const Graph& p : patterns) {
        const auto found = contains_subgraph(host, PatternSpec::custom(p));
        CHECK(found.has_value() == oracle_contains(host, p));
        if (found) CHECK(witness_is_valid(host, PatternSpec::custom(p), *found));
      }
    }
  }
}

TEST_CASE("containment survives edge additions") {
  std::mt19937_64 rng(555);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n, 40);
    const PatternSpec pat = PatternSpec::cycle(4);
    if (is_free(g, pat)) continue;
    for (int step = 0; step < 5; ++step) {
      const int u = static_cast<int>(rng() % n);
      const int v = static_cast<int>(rng() % n);
      if (u != v && !g.has_edge(u, v)) g = g.with_edge(u, v);
      CHECK_FALSE(is_free(g, pat));
    }
  }
}

TEST_CASE("path-free graphs obey the edge bound") {
  for (int k = 3; k <= 8; ++k) {
    const PatternSpec path = PatternSpec::path(k);
    for (int n = 1; n <= 8; ++n) {
      for (const std::string& s : graph_catalog(n)) {
        const Graph g = decode_graph6(s);
        if (!is_free(g, path)) continue;
        CHECK(2 * g.edge_count() <= (k - 2) * n);
      }
    }
  }
}

TEST_CASE("degree-bounded component builds pack two disjoint stars and paths") {
  for (int n = 12; n <= 24; ++n) {
    const Graph u = build_regular_pfree(n, 4).graph;
    CHECK(degree_profile(u).max_degree == 3);
    CHECK(find_disjoint_copies(u, PatternSpec::path(4), 2).has_value());
    CHECK(find_disjoint_copies(u, PatternSpec::star(4), 2).has_value());
  }
}

TEST_CASE("edge-anchored containment") {
  const Graph diamondless = complete_graph(4).without_edge(2, 3);
  CHECK(contains_subgraph_using_edge(diamondless, PatternSpec::clique(3), 0, 1));
  CHECK(contains_subgraph_using_edge(diamondless, PatternSpec::clique(3), 0, 2));
  CHECK_THROWS_AS(contains_subgraph_using_edge(diamondless, PatternSpec::clique(3), 2, 3),
                  argument_error);
  CHECK_FALSE(contains_subgraph_using_edge(path_graph(4), PatternSpec::clique(3), 1, 2));

  // The anchored test is exactly "did this addition create a copy".
  std::mt19937_64 rng(808);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const Graph g = random_graph(rng, n, 45);
    const int u = static_cast<int>(rng() % n);
    const int v = static_cast<int>(rng() % n);
    if (u == v || g.has_edge(u, v)) continue;
    const Graph h = g.with_edge(u, v);
    const PatternSpec pat = PatternSpec::cycle(5);
    const bool created = is_free(g, pat) && !is_free(h, pat);
    if (is_free(g, pat)) CHECK(contains_subgraph_using_edge(h, pat, u, v) == created);
  }
}

TEST_CASE("pattern text forms round-trip") {
  for (const char* text : {"wheel:7", "path:5", "cycle:6", "star:4", "clique:3", "matching:6",
                           "fan:4", "g6:Bw", "family:star:4,path:5"}) {
    const PatternSpec p = parse_pattern(text);
    CHECK(render_pattern(p) == text);
    CHECK(parse_pattern(render_pattern(p)) == p);
  }
  CHECK(parse_pattern("wheel:7").kind() == PatternKind::wheel);
  CHECK(parse_pattern("wheel:7").size() == 7);
  const PatternSpec fam = parse_pattern("family:star:4,path:5");
  CHECK(fam.kind() == PatternKind::family);
  CHECK(fam.members().size() == 2);
  CHECK(fam.members()[0].graph() == star_graph(4));
  CHECK(parse_pattern("g6:Bw").graph() == complete_graph(3));
}

TEST_CASE("pattern text errors carry offsets") {
  const auto offset_of = [](const std::string& text) -> std::size_t {
    try {
      parse_pattern(text);
    } catch (const parse_error& e) {
      return e.byte_offset();
    }
    FAIL("expected a parse error for: " << text);
    return ~std::size_t{0};
  };
  CHECK(offset_of("wheel:3") == 0);
  CHECK(offset_of("wheel") == 0);
  CHECK(offset_of("wheel:x") == 6);
  CHECK(offset_of("bogus:4") == 0);
  CHECK(offset_of("g6:=") == 3);
  CHECK(offset_of("family:") == 7);
  CHECK(offset_of("family:star:4,") == 14);
  CHECK(offset_of("family:star:4,wheel:3") == 14);
}

TEST_CASE("pattern factories validate their arguments") {
  CHECK_THROWS_AS(PatternSpec::wheel(3), argument_error);
  CHECK_THROWS_AS(PatternSpec::path(0), argument_error);
  CHECK_THROWS_AS(PatternSpec::cycle(2), argument_error);
  CHECK_THROWS_AS(PatternSpec::fan(1), argument_error);
  CHECK_THROWS_AS(PatternSpec::custom(Graph::empty(3)), argument_error);
  CHECK_THROWS_AS(PatternSpec::family({}), argument_error);
  CHECK_THROWS_AS(PatternSpec::family({PatternSpec::family({PatternSpec::path(3)})}),
                  argument_error);
  CHECK_THROWS_AS(PatternSpec::wheel(17), capability_error);
  CHECK_THROWS_AS(PatternSpec::path(17), capability_error);
  CHECK_THROWS_AS(PatternSpec::custom(complete_graph(17)), capability_error);
  CHECK(PatternSpec::fan(15).graph().vertex_count() == 16);
  CHECK_THROWS_AS(PatternSpec::fan(16), capability_error);
}

TEST_CASE("invalid witnesses are rejected") {
  const Graph host = complete_graph(4);
  const PatternSpec tri = PatternSpec::clique(3);
  EmbeddingWitness w;
  w.map = {0, 1, 2};
  CHECK(witness_is_valid(host, tri, w));
  w.map = {0, 1};
  CHECK_FALSE(witness_is_valid(host, tri, w));
  w.map = {0, 1, 1};
  CHECK_FALSE(witness_is_valid(host, tri, w));
  w.map = {0, 1, 9};
  CHECK_FALSE(witness_is_valid(host, tri, w));
  EmbeddingWitness miss;
  miss.map = {0, 1, 3};
  CHECK_FALSE(witness_is_valid(path_graph(4), tri, miss));
}

}  // TEST_SUITE
