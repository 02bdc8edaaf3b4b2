#include "turan/report.hpp"

#include <sstream>

#include "turan/errors.hpp"
#include "turan/graph6.hpp"

namespace turan {

using nlohmann::ordered_json;

std::string method_name(SearchMethod method) {
  switch (method) {
    case SearchMethod::exhaustive_catalog: return "exhaustive_catalog";
    case SearchMethod::augmentation: return "augmentation";
    case SearchMethod::branch_and_bound: return "branch_and_bound";
    case SearchMethod::hill_climb_lower_bound: return "hill_climb_lower_bound";
  }
  throw validation_error("unhandled search method");
}

SearchMethod parse_method(const std::string& name) {
  if (name == "exhaustive_catalog") return SearchMethod::exhaustive_catalog;
  if (name == "augmentation") return SearchMethod::augmentation;
  if (name == "branch_and_bound") return SearchMethod::branch_and_bound;
  if (name == "hill_climb_lower_bound") return SearchMethod::hill_climb_lower_bound;
  throw argument_error("unknown method '" + name +
                       "'; expected exhaustive_catalog, augmentation, branch_and_bound, or "
                       "hill_climb_lower_bound");
}

std::string match_tag_name(MatchTag tag) {
  switch (tag) {
    case MatchTag::matches_f: return "matches_f";
    case MatchTag::matches_f_plus_one: return "matches_f_plus_one";
    case MatchTag::matches_neither: return "matches_neither";
    case MatchTag::not_computed: return "not_computed";
  }
  throw validation_error("unhandled match tag");
}

std::string recipe_kind_name(RecipeKind kind) {
  switch (kind) {
    case RecipeKind::u_family: return "u_family";
    case RecipeKind::k_family: return "k_family";
    case RecipeKind::turan_graph: return "turan_graph";
  }
  throw validation_error("unhandled recipe kind");
}

ordered_json to_json(const SearchReport& report) {
  return ordered_json{{"n", report.n},
                      {"pattern", render_pattern(report.pattern)},
                      {"turan_value", report.turan_value},
                      {"witnesses", report.witnesses},
                      {"witness_count", report.witness_count},
                      {"method", method_name(report.method)},
                      {"nodes_explored", report.nodes_explored},
                      {"elapsed_ms", report.elapsed_ms}};
}

ordered_json to_json(const VerificationRow& row) {
  ordered_json j{{"n", row.n},
                 {"k", row.k},
                 {"brute_force", nullptr},
                 {"f_val", row.f_val},
                 {"f_plus_one", row.f_plus_one},
                 {"construction_edges", row.construction_edges},
                 {"match_tag", match_tag_name(row.match_tag)}};
  if (row.brute_force) j["brute_force"] = *row.brute_force;
  return j;
}

ordered_json to_json(const std::vector<VerificationRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const VerificationRow& row : rows) j.push_back(to_json(row));
  return j;
}

ordered_json to_json(const ConstructionRecipe& recipe) {
  ordered_json j{{"kind", recipe_kind_name(recipe.kind)},
                 {"n", recipe.n},
                 {"k", recipe.k},
                 {"split", nullptr},
                 {"component_sizes", recipe.component_sizes},
                 {"embedded_edge", nullptr}};
  if (recipe.split) {
    j["split"] = ordered_json{
        {"n0", recipe.split->n0}, {"n1", recipe.split->n1}, {"value", recipe.split->value}};
  }
  if (recipe.embedded_edge) {
    j["embedded_edge"] = ordered_json::array(
        {recipe.embedded_edge->first, recipe.embedded_edge->second});
  }
  return j;
}

ordered_json to_json(const EmbeddingWitness& witness) {
  return ordered_json{{"member", witness.member}, {"map", witness.map}};
}

ordered_json to_json(const DecompositionResult& result) {
  ordered_json certificates = ordered_json::array();
  for (const EmbeddingWitness& w : result.certificates) certificates.push_back(to_json(w));
  return ordered_json{{"source", result.source},
                      {"p", result.p},
                      {"t_used", result.t_used},
                      {"family", result.family},
                      {"certificates", certificates}};
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_search(const SearchReport& report) {
  std::ostringstream out;
  out << "n,pattern,turan_value,witness_count,method,nodes_explored,elapsed_ms,witnesses\n";
  std::string joined;
  for (const std::string& w : report.witnesses) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  out << report.n << ',' << csv_quote(render_pattern(report.pattern)) << ','
      << report.turan_value << ',' << report.witness_count << ',' << method_name(report.method)
      << ',' << report.nodes_explored << ',' << report.elapsed_ms << ',' << csv_quote(joined)
      << '\n';
  return out.str();
}

std::string csv_verification(const std::vector<VerificationRow>& rows) {
  std::ostringstream out;
  out << "n,k,brute_force,f_val,f_plus_one,construction_edges,match_tag\n";
  for (const VerificationRow& row : rows) {
    out << row.n << ',' << row.k << ',';
    if (row.brute_force) out << *row.brute_force;
    out << ',' << row.f_val << ',' << row.f_plus_one << ',' << row.construction_edges << ','
        << match_tag_name(row.match_tag) << '\n';
  }
  return out.str();
}

std::string csv_decomposition(const DecompositionResult& result) {
  std::ostringstream out;
  out << "member,graph6,vertices,edges\n";
  for (std::size_t i = 0; i < result.family.size(); ++i) {
    const Graph g = decode_graph6(result.family[i]);
    out << i << ',' << csv_quote(result.family[i]) << ',' << g.vertex_count() << ','
        << g.edge_count() << '\n';
  }
  return out.str();
}

}  // namespace turan
