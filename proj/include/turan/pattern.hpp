#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

enum class PatternKind { wheel, path, cycle, star, clique, matching, fan, custom, family };

// A forbidden-subgraph description.  Named kinds carry their total vertex
// count; custom carries an explicit graph; a family is a non-empty list of
// single patterns and forbids each of its members.
class PatternSpec {
public:
  static PatternSpec wheel(int k);      // k >= 4
  static PatternSpec path(int k);       // k >= 1
  static PatternSpec cycle(int k);      // k >= 3
  static PatternSpec star(int k);       // k >= 1
  static PatternSpec clique(int k);     // k >= 1
  static PatternSpec matching(int k);   // k >= 1
  static PatternSpec fan(int m);        // m >= 2
  static PatternSpec custom(Graph g);   // at least one edge
  static PatternSpec family(std::vector<PatternSpec> members);

  PatternKind kind() const noexcept { return kind_; }

  // Size parameter as given to the factory.  For every named kind except fan
  // this is the pattern's vertex count; a fan on parameter m has m+1.
  int size() const;

  // The pattern graph.  Not available for families.
  const Graph& graph() const;

  // Family members, in the order given.  Only available for families.
  const std::vector<PatternSpec>& members() const;

  bool operator==(const PatternSpec&) const = default;

private:
  PatternSpec() = default;

  PatternKind kind_ = PatternKind::custom;
  int size_ = 0;
  std::vector<Graph> graph_;               // one entry unless family
  std::vector<PatternSpec> members_;
};

// An embedding of a pattern into a host.  map[i] is the host vertex taken by
// pattern vertex i.  member is the index into the family for family patterns
// and -1 otherwise.
struct EmbeddingWitness {
  int member = -1;
  std::vector<int> map;

  bool operator==(const EmbeddingWitness&) const = default;
};

// First embedding in deterministic search order: pattern vertices are tried
// by descending pattern degree, host candidates ascending.  For families,
// members are tried in order and the first hit wins.
std::optional<EmbeddingWitness> contains_subgraph(const Graph& host, const PatternSpec& pattern);

bool is_free(const Graph& host, const PatternSpec& pattern);

// True when some embedding maps a pattern edge onto the host edge {u, v}.
// For a host that was pattern-free before {u, v} was added, this decides
// whether the addition created a copy.
bool contains_subgraph_using_edge(const Graph& host, const PatternSpec& pattern, int u, int v);

// Specialized wheel test: hubs ascending, then a (k-1)-cycle inside the
// hub's neighborhood.  Agrees with contains_subgraph on wheel patterns.
std::optional<EmbeddingWitness> contains_wheel(const Graph& host, int k);

// A cycle of exactly the given length using only vertices from the subset,
// as the vertex sequence around the cycle; lowest-vertex-first orientation.
std::optional<std::vector<int>> fixed_length_cycle_in_subset(const Graph& g, std::uint64_t subset,
                                                             int length);

// `copies` pairwise vertex-disjoint embeddings, or nothing.  For families,
// each copy may use a different member.
std::optional<std::vector<EmbeddingWitness>> find_disjoint_copies(const Graph& host,
                                                                  const PatternSpec& pattern,
                                                                  int copies);

// True when the witness is an injective map sending every pattern edge to a
// host edge.
bool witness_is_valid(const Graph& host, const PatternSpec& pattern, const EmbeddingWitness& w);

// Text forms like "wheel:5", "g6:Bw", "family:star:4,cycle:6".
std::string render_pattern(const PatternSpec& pattern);
PatternSpec parse_pattern(const std::string& text);

}  // namespace turan
