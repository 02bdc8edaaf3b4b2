#include "turan/pattern.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>
#include <utility>

#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

namespace {

constexpr int max_pattern_vertices = 16;

void check_pattern_size(const Graph& g, const char* what) {
  if (g.vertex_count() > max_pattern_vertices) {
    throw capability_error(std::string(what) + " patterns are limited to " +
                           std::to_string(max_pattern_vertices) + " vertices, got " +
                           std::to_string(g.vertex_count()));
  }
}

}  // namespace

PatternSpec PatternSpec::wheel(int k) {
  PatternSpec p;
  p.kind_ = PatternKind::wheel;
  p.size_ = k;
  p.graph_.push_back(wheel_graph(k));
  check_pattern_size(p.graph_.front(), "wheel");
  return p;
}

PatternSpec PatternSpec::path(int k) {
  PatternSpec p;
  p.kind_ = PatternKind::path;
  p.size_ = k;
  p.graph_.push_back(path_graph(k));
  check_pattern_size(p.graph_.front(), "path");
  return p;
}

PatternSpec PatternSpec::cycle(int k) {
  PatternSpec p;
  p.kind_ = PatternKind::cycle;
  p.size_ = k;
  p.graph_.push_back(cycle_graph(k));
  check_pattern_size(p.graph_.front(), "cycle");
  return p;
}

PatternSpec PatternSpec::star(int k) {
  PatternSpec p;
  p.kind_ = PatternKind::star;
  p.size_ = k;
  p.graph_.push_back(star_graph(k));
  check_pattern_size(p.graph_.front(), "star");
  return p;
}

PatternSpec PatternSpec::clique(int k) {
  if (k < 1) throw argument_error("a clique pattern needs at least 1 vertex");
  PatternSpec p;
  p.kind_ = PatternKind::clique;
  p.size_ = k;
  p.graph_.push_back(complete_graph(k));
  check_pattern_size(p.graph_.front(), "clique");
  return p;
}

PatternSpec PatternSpec::matching(int k) {
  if (k < 1) throw argument_error("a matching pattern needs at least 1 vertex");
  PatternSpec p;
  p.kind_ = PatternKind::matching;
  p.size_ = k;
  p.graph_.push_back(matching_graph(k));
  check_pattern_size(p.graph_.front(), "matching");
  return p;
}

PatternSpec PatternSpec::fan(int m) {
  PatternSpec p;
  p.kind_ = PatternKind::fan;
  p.size_ = m;
  p.graph_.push_back(fan_graph(m));
  check_pattern_size(p.graph_.front(), "fan");
  return p;
}

PatternSpec PatternSpec::custom(Graph g) {
  if (g.edge_count() < 1) throw argument_error("a custom pattern needs at least one edge");
  check_pattern_size(g, "custom");
  PatternSpec p;
  p.kind_ = PatternKind::custom;
  p.size_ = g.vertex_count();
  p.graph_.push_back(std::move(g));
  return p;
}

PatternSpec PatternSpec::family(std::vector<PatternSpec> members) {
  if (members.empty()) throw argument_error("a pattern family needs at least one member");
  for (const auto& m : members) {
    if (m.kind() == PatternKind::family) {
      throw argument_error("pattern families cannot be nested");
    }
  }
  PatternSpec p;
  p.kind_ = PatternKind::family;
  p.members_ = std::move(members);
  return p;
}

int PatternSpec::size() const {
  if (kind_ == PatternKind::family) {
    throw argument_error("a pattern family has no single size parameter");
  }
  return size_;
}

const Graph& PatternSpec::graph() const {
  if (kind_ == PatternKind::family) {
    throw argument_error("a pattern family has no single pattern graph");
  }
  return graph_.front();
}

const std::vector<PatternSpec>& PatternSpec::members() const {
  if (kind_ != PatternKind::family) {
    throw argument_error("only pattern families have members");
  }
  return members_;
}

namespace {

// Backtracking injective embedding search.  Pattern vertices are tried in
// descending pattern-degree order (stable on index); host candidates are the
// intersection of the neighborhoods of already-placed pattern neighbors,
// scanned ascending.  Emit receives the map (pattern vertex -> host vertex)
// and returns true to stop the enumeration.
struct EmbeddingSearch {
  const Graph& host;
  const Graph& pat;
  int pn;
  std::uint64_t allowed;
  std::vector<int> order;      // positions -> pattern vertex
  std::vector<std::uint64_t> degree_ok;  // per pattern vertex: host vertices of enough degree
  std::vector<int> host_of;    // pattern vertex -> host vertex or -1
  std::uint64_t used = 0;

  EmbeddingSearch(const Graph& h, const Graph& p, std::uint64_t allowed_mask)
      : host(h), pat(p), pn(p.vertex_count()), allowed(allowed_mask & h.vertex_mask()) {
    order.resize(pn);
    for (int i = 0; i < pn; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
    degree_ok.assign(pn, 0);
    const int hn = host.vertex_count();
    for (int pv = 0; pv < pn; ++pv) {
      std::uint64_t ok = 0;
      for (int hv = 0; hv < hn; ++hv) {
        if (host.degree(hv) >= pat.degree(pv)) ok |= 1ULL << hv;
      }
      degree_ok[pv] = ok;
    }
    host_of.assign(pn, -1);
  }

  // Pre-places pattern vertex pv on host vertex hv; false when that is
  // already inconsistent.
  bool force(int pv, int hv) {
    if (((allowed >> hv) & 1ULL) == 0) return false;
    if (((degree_ok[pv] >> hv) & 1ULL) == 0) return false;
    if ((used >> hv) & 1ULL) return false;
    std::uint64_t placed_nbrs = pat.neighbors(pv);
    for (int q = 0; q < pn; ++q) {
      if (host_of[q] < 0 || ((placed_nbrs >> q) & 1ULL) == 0) continue;
      if (((host.neighbors(hv) >> host_of[q]) & 1ULL) == 0) return false;
    }
    host_of[pv] = hv;
    used |= 1ULL << hv;
    return true;
  }

  template <typename Emit>
  bool search(Emit&& emit) {
    return descend(0, emit);
  }

 private:
  template <typename Emit>
  bool descend(int pos, Emit& emit) {
    while (pos < pn && host_of[order[pos]] >= 0) ++pos;
    if (pos == pn) return emit(host_of);
    const int pv = order[pos];
    std::uint64_t candidates = allowed & ~used & degree_ok[pv];
    std::uint64_t pat_nbrs = pat.neighbors(pv);
    for (int q = 0; q < pn && candidates; ++q) {
      if (host_of[q] >= 0 && ((pat_nbrs >> q) & 1ULL)) {
        candidates &= host.neighbors(host_of[q]);
      }
    }
    while (candidates) {
      const int hv = std::countr_zero(candidates);
      candidates &= candidates - 1;
      host_of[pv] = hv;
      used |= 1ULL << hv;
      if (descend(pos + 1, emit)) return true;
      host_of[pv] = -1;
      used &= ~(1ULL << hv);
    }
    return false;
  }
};

// Runs emit over embeddings of each applicable member (index -1 for single
// patterns) until emit returns true.
template <typename Emit>
bool enumerate_embeddings(const Graph& host, const PatternSpec& pattern, std::uint64_t allowed,
                          Emit&& emit) {
  if (pattern.kind() == PatternKind::family) {
    const auto& members = pattern.members();
    for (std::size_t m = 0; m < members.size(); ++m) {
      EmbeddingSearch search(host, members[m].graph(), allowed);
      if (search.search([&](const std::vector<int>& map) {
            return emit(static_cast<int>(m), map);
          })) {
        return true;
      }
    }
    return false;
  }
  EmbeddingSearch search(host, pattern.graph(), allowed);
  return search.search([&](const std::vector<int>& map) { return emit(-1, map); });
}

}  // namespace

std::optional<EmbeddingWitness> contains_subgraph(const Graph& host, const PatternSpec& pattern) {
  std::optional<EmbeddingWitness> found;
  enumerate_embeddings(host, pattern, host.vertex_mask(),
                       [&](int member, const std::vector<int>& map) {
                         found = EmbeddingWitness{member, map};
                         return true;
                       });
  return found;
}

std::optional<std::vector<int>> fixed_length_cycle_in_subset(const Graph& g, std::uint64_t subset,
                                                             int length) {
  if (length < 3) throw argument_error("cycles have at least 3 vertices");
  subset &= g.vertex_mask();
  // Vertices with fewer than two neighbors inside the subset cannot lie on a
  // cycle; peel them off until stable.
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    std::uint64_t scan = subset;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(g.neighbors(v) & subset) < 2) {
        subset &= ~(1ULL << v);
        shrunk = true;
      }
    }
  }
  if (std::popcount(subset) < length) return std::nullopt;

  std::vector<int> path;
  path.reserve(length);

  // Each cycle is rooted at its smallest vertex; the second vertex is kept
  // below the last to fix one orientation.
  struct Dfs {
    const Graph& g;
    std::uint64_t subset;
    int length;
    std::vector<int>& path;
    std::uint64_t used = 0;

    bool extend(int anchor) {
      const int last = path.back();
      if (static_cast<int>(path.size()) == length) {
        return ((g.neighbors(last) >> anchor) & 1ULL) && path[1] < last;
      }
      std::uint64_t candidates = g.neighbors(last) & subset & ~used;
      // Only vertices above the anchor; the anchor is the cycle minimum.
      candidates &= anchor >= 63 ? 0ULL : ~0ULL << (anchor + 1);
      while (candidates) {
        const int v = std::countr_zero(candidates);
        candidates &= candidates - 1;
        path.push_back(v);
        used |= 1ULL << v;
        if (extend(anchor)) return true;
        used &= ~(1ULL << v);
        path.pop_back();
      }
      return false;
    }
  };

  std::uint64_t anchors = subset;
  while (anchors) {
    const int a = std::countr_zero(anchors);
    anchors &= anchors - 1;
    path.assign(1, a);
    Dfs dfs{g, subset, length, path};
    dfs.used = 1ULL << a;
    if (dfs.extend(a)) return path;
  }
  return std::nullopt;
}

std::optional<EmbeddingWitness> contains_wheel(const Graph& host, int k) {
  if (k < 4) throw argument_error("a wheel needs at least 4 vertices, got " + std::to_string(k));
  const int n = host.vertex_count();
  for (int hub = 0; hub < n; ++hub) {
    if (host.degree(hub) < k - 1) continue;
    auto rim = fixed_length_cycle_in_subset(host, host.neighbors(hub), k - 1);
    if (!rim) continue;
    EmbeddingWitness w;
    w.map.reserve(k);
    w.map.push_back(hub);
    w.map.insert(w.map.end(), rim->begin(), rim->end());
    return w;
  }
  return std::nullopt;
}

bool is_free(const Graph& host, const PatternSpec& pattern) {
  switch (pattern.kind()) {
    case PatternKind::wheel:
      return !contains_wheel(host, pattern.size());
    case PatternKind::family: {
      for (const auto& member : pattern.members()) {
        if (!is_free(host, member)) return false;
      }
      return true;
    }
    default:
      return !contains_subgraph(host, pattern);
  }
}

namespace {

bool member_uses_edge(const Graph& host, const Graph& pat, int u, int v) {
  for (auto [a, b] : pat.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      EmbeddingSearch search(host, pat, host.vertex_mask());
      const int hu = flip ? v : u;
      const int hv = flip ? u : v;
      if (!search.force(a, hu) || !search.force(b, hv)) continue;
      if (search.search([](const std::vector<int>&) { return true; })) return true;
    }
  }
  return false;
}

}  // namespace

bool contains_subgraph_using_edge(const Graph& host, const PatternSpec& pattern, int u, int v) {
  if (!host.has_edge(u, v)) {
    throw argument_error("the probed pair is not an edge of the host");
  }
  if (pattern.kind() == PatternKind::family) {
    for (const auto& member : pattern.members()) {
      if (member_uses_edge(host, member.graph(), u, v)) return true;
    }
    return false;
  }
  return member_uses_edge(host, pattern.graph(), u, v);
}

namespace {

bool pack_copies(const Graph& host, const PatternSpec& pattern, std::uint64_t allowed,
                 int remaining, std::vector<EmbeddingWitness>& out) {
  if (remaining == 0) return true;
  bool done = false;
  enumerate_embeddings(host, pattern, allowed, [&](int member, const std::vector<int>& map) {
    std::uint64_t taken = 0;
    for (int hv : map) taken |= 1ULL << hv;
    out.push_back(EmbeddingWitness{member, map});
    if (pack_copies(host, pattern, allowed & ~taken, remaining - 1, out)) {
      done = true;
      return true;
    }
    out.pop_back();
    return false;
  });
  return done;
}

}  // namespace

std::optional<std::vector<EmbeddingWitness>> find_disjoint_copies(const Graph& host,
                                                                  const PatternSpec& pattern,
                                                                  int copies) {
  if (copies < 1) throw argument_error("need at least one copy, got " + std::to_string(copies));
  std::vector<EmbeddingWitness> out;
  if (pack_copies(host, pattern, host.vertex_mask(), copies, out)) return out;
  return std::nullopt;
}

bool witness_is_valid(const Graph& host, const PatternSpec& pattern, const EmbeddingWitness& w) {
  const Graph* pat = nullptr;
  if (pattern.kind() == PatternKind::family) {
    if (w.member < 0 || w.member >= static_cast<int>(pattern.members().size())) return false;
    pat = &pattern.members()[w.member].graph();
  } else {
    pat = &pattern.graph();
  }
  const int pn = pat->vertex_count();
  if (static_cast<int>(w.map.size()) != pn) return false;
  std::uint64_t seen = 0;
  for (int hv : w.map) {
    if (hv < 0 || hv >= host.vertex_count()) return false;
    if ((seen >> hv) & 1ULL) return false;
    seen |= 1ULL << hv;
  }
  for (auto [a, b] : pat->edges()) {
    if (!host.has_edge(w.map[a], w.map[b])) return false;
  }
  return true;
}

namespace {

std::string kind_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::wheel: return "wheel";
    case PatternKind::path: return "path";
    case PatternKind::cycle: return "cycle";
    case PatternKind::star: return "star";
    case PatternKind::clique: return "clique";
    case PatternKind::matching: return "matching";
    case PatternKind::fan: return "fan";
    case PatternKind::custom: return "g6";
    case PatternKind::family: return "family";
  }
  return "?";
}

PatternSpec parse_single(const std::string& token, std::size_t base) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) {
    throw parse_error("pattern must look like name:k or g6:STRING", base);
  }
  const std::string name = token.substr(0, colon);
  const std::string arg = token.substr(colon + 1);
  const std::size_t arg_at = base + colon + 1;
  if (name == "g6") {
    try {
      return PatternSpec::custom(decode_graph6(arg));
    } catch (const parse_error& e) {
      throw parse_error("bad graph6 pattern: " + std::string(e.what()), arg_at);
    } catch (const argument_error& e) {
      throw parse_error(e.what(), arg_at);
    }
  }
  int k = 0;
  const auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
  if (ec != std::errc() || end != arg.data() + arg.size() || arg.empty()) {
    throw parse_error("pattern size must be an integer", arg_at);
  }
  try {
    if (name == "wheel") return PatternSpec::wheel(k);
    if (name == "path") return PatternSpec::path(k);
    if (name == "cycle") return PatternSpec::cycle(k);
    if (name == "star") return PatternSpec::star(k);
    if (name == "clique") return PatternSpec::clique(k);
    if (name == "matching") return PatternSpec::matching(k);
    if (name == "fan") return PatternSpec::fan(k);
  } catch (const argument_error& e) {
    throw parse_error(e.what(), base);
  }
  throw parse_error("unknown pattern name '" + name + "'", base);
}

}  // namespace

std::string render_pattern(const PatternSpec& pattern) {
  switch (pattern.kind()) {
    case PatternKind::custom:
      return "g6:" + encode_graph6(pattern.graph());
    case PatternKind::family: {
      std::string out = "family:";
      bool first = true;
      for (const auto& member : pattern.members()) {
        if (!first) out += ',';
        out += render_pattern(member);
        first = false;
      }
      return out;
    }
    default:
      return kind_name(pattern.kind()) + ":" + std::to_string(pattern.size());
  }
}

PatternSpec parse_pattern(const std::string& text) {
  const std::string family_prefix = "family:";
  if (text.rfind(family_prefix, 0) == 0) {
    const std::string rest = text.substr(family_prefix.size());
    if (rest.empty()) {
      throw parse_error("a pattern family needs at least one member", family_prefix.size());
    }
    std::vector<PatternSpec> members;
    std::size_t at = 0;
    while (at <= rest.size()) {
      std::size_t comma = rest.find(',', at);
      if (comma == std::string::npos) comma = rest.size();
      const std::string token = rest.substr(at, comma - at);
      if (token.empty()) {
        throw parse_error("empty pattern family member", family_prefix.size() + at);
      }
      members.push_back(parse_single(token, family_prefix.size() + at));
      at = comma + 1;
      if (comma == rest.size()) break;
    }
    return PatternSpec::family(std::move(members));
  }
  return parse_single(text, 0);
}

}  // namespace turan
