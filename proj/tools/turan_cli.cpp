#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/decomposition.hpp"
#include "turan/errors.hpp"
#include "turan/graph6.hpp"
#include "turan/report.hpp"
#include "turan/search.hpp"

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw turan::argument_error("cannot open output file " + out_path);
  file << text;
}

void check_format(const std::string& format, bool g6_lines_ok) {
  if (format == "json" || format == "csv") return;
  if (format == "g6-lines") {
    if (g6_lines_ok) return;
    throw turan::argument_error("this command emits no graph lines; use json or csv");
  }
  throw turan::argument_error("unknown format '" + format +
                              "'; expected json, csv, or g6-lines");
}

struct CommonFlags {
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format: json, csv, or g6-lines");
  cmd->add_option("--out", flags.out, "Output file (default: stdout)");
}

int run_turan(int n, const std::string& pattern_text, const std::string& method_text,
              std::uint64_t seed, int restarts, std::optional<long long> budget_ms,
              const CommonFlags& flags) {
  check_format(flags.format, true);
  const turan::PatternSpec pattern = turan::parse_pattern(pattern_text);
  const turan::SearchMethod method = turan::parse_method(method_text);
  turan::SearchReport report(n, pattern, method);
  if (method == turan::SearchMethod::hill_climb_lower_bound) {
    report = turan::lower_bound_hill_climb(n, pattern, restarts, seed);
  } else {
    turan::SearchOptions options;
    options.seed = seed;
    if (budget_ms) {
      if (*budget_ms < 0) throw turan::argument_error("budget must be nonnegative");
      const auto cap = turan::no_budget / turan::nodes_per_ms;
      options.node_budget = static_cast<std::uint64_t>(*budget_ms) >= cap
                                ? turan::no_budget
                                : static_cast<std::uint64_t>(*budget_ms) * turan::nodes_per_ms;
    }
    report = turan::turan_number(n, pattern, method, options);
  }
  if (flags.format == "json") {
    emit(dump(turan::to_json(report)), flags.out);
  } else if (flags.format == "csv") {
    emit(turan::csv_search(report), flags.out);
  } else {
    std::string lines;
    for (const std::string& w : report.witnesses) lines += w + "\n";
    emit(lines, flags.out);
  }
  return 0;
}

int run_construct(int n, int k, const std::string& recipe, const CommonFlags& flags) {
  check_format(flags.format, true);
  turan::Construction built = recipe == "u_family" ? turan::build_regular_pfree(n, k)
                                                   : turan::build_extremal_family(n, k);
  const std::string g6 = turan::encode_graph6(built.graph);
  if (flags.format == "json") {
    emit(dump(ordered_json{{"graph", g6}, {"recipe", turan::to_json(built.recipe)}}), flags.out);
  } else if (flags.format == "csv") {
    std::string row = "n,k,kind,edges,graph6\n";
    row += std::to_string(n) + "," + std::to_string(k) + "," +
           turan::recipe_kind_name(built.recipe.kind) + "," +
           std::to_string(built.graph.edge_count()) + "," + turan::csv_quote(g6) + "\n";
    emit(row, flags.out);
  } else {
    emit(g6 + "\n", flags.out);
  }
  return 0;
}

int run_verify(int k, int from, int to, long long budget_ms, const std::string& check,
               const CommonFlags& flags) {
  check_format(flags.format, false);
  std::vector<turan::VerificationRow> rows;
  if (check == "wheel") {
    rows = turan::verify_theorem(k, from, to, budget_ms);
  } else if (check == "star-path") {
    rows = turan::verify_proposition21(k, from, to);
  } else {
    throw turan::argument_error("unknown check '" + check + "'; expected wheel or star-path");
  }
  if (flags.format == "json") {
    emit(dump(turan::to_json(rows)), flags.out);
  } else {
    emit(turan::csv_verification(rows), flags.out);
  }
  return 0;
}

int run_decomp(const std::string& graph_text, std::optional<int> t, const CommonFlags& flags) {
  check_format(flags.format, true);
  const turan::Graph target = turan::decode_graph6(graph_text);
  const turan::DecompositionResult result = turan::decomposition_family(target, t);
  if (flags.format == "json") {
    emit(dump(turan::to_json(result)), flags.out);
  } else if (flags.format == "csv") {
    emit(turan::csv_decomposition(result), flags.out);
  } else {
    std::string lines;
    for (const std::string& member : result.family) lines += member + "\n";
    emit(lines, flags.out);
  }
  return 0;
}

int run_detect(const std::string& graph_text, const std::string& pattern_text, int copies,
               const CommonFlags& flags) {
  check_format(flags.format, false);
  const turan::Graph host = turan::decode_graph6(graph_text);
  const turan::PatternSpec pattern = turan::parse_pattern(pattern_text);
  const auto found = turan::find_disjoint_copies(host, pattern, copies);
  if (flags.format == "json") {
    ordered_json witnesses = ordered_json::array();
    if (found) {
      for (const turan::EmbeddingWitness& w : *found) witnesses.push_back(turan::to_json(w));
    }
    emit(dump(ordered_json{{"found", found.has_value()},
                           {"requested", copies},
                           {"copies", witnesses}}),
         flags.out);
  } else {
    std::string text = "copy,member,map\n";
    if (found) {
      for (std::size_t i = 0; i < found->size(); ++i) {
        std::string map;
        for (int v : (*found)[i].map) {
          if (!map.empty()) map += ' ';
          map += std::to_string(v);
        }
        text += std::to_string(i) + "," + std::to_string((*found)[i].member) + "," +
                turan::csv_quote(map) + "\n";
      }
    }
    emit(text, flags.out);
  }
  return 0;
}

int run_convert(const std::string& graph_text, bool canonical, const CommonFlags& flags) {
  check_format(flags.format, true);
  const turan::Graph g = turan::decode_graph6(graph_text);
  const std::string g6 = canonical ? turan::canonical_form(g).bytes : turan::encode_graph6(g);
  if (flags.format == "json") {
    emit(dump(ordered_json{{"graph", g6}}), flags.out);
  } else if (flags.format == "csv") {
    emit("graph6\n" + turan::csv_quote(g6) + "\n", flags.out);
  } else {
    emit(g6 + "\n", flags.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extremal graph workbench: search, constructions, verification sweeps"};
  app.require_subcommand(1);

  int n = 0;
  int k = 0;
  int from = 0;
  int to = 0;
  int restarts = 0;
  int copies = 1;
  std::uint64_t seed = 0;
  long long verify_budget_ms = 10000;
  std::optional<long long> turan_budget_ms;
  std::optional<int> decomp_t;
  std::string pattern_text;
  std::string graph_text;
  std::string method_text = "branch_and_bound";
  std::string recipe = "k_family";
  std::string check = "wheel";
  bool canonical = false;
  CommonFlags turan_flags, construct_flags, verify_flags, decomp_flags, detect_flags,
      convert_flags;

  CLI::App* cmd_turan = app.add_subcommand("turan", "Maximum edge count avoiding a pattern");
  cmd_turan->add_option("--n", n, "Host vertex count")->required();
  cmd_turan->add_option("--pattern", pattern_text, "Forbidden pattern")->required();
  cmd_turan->add_option("--method", method_text,
                        "exhaustive_catalog, augmentation, branch_and_bound, or "
                        "hill_climb_lower_bound");
  cmd_turan->add_option("--seed", seed, "Seed for hill climbing");
  cmd_turan->add_option("--restarts", restarts, "Hill-climb restarts");
  long long turan_budget_raw = -1;
  cmd_turan->add_option("--budget-ms", turan_budget_raw, "Node budget, in budget units");
  add_common(cmd_turan, turan_flags);

  CLI::App* cmd_construct = app.add_subcommand("construct", "Build a named extremal graph");
  cmd_construct->add_option("--n", n, "Vertex count")->required();
  cmd_construct->add_option("--k", k, "Wheel parameter")->required();
  cmd_construct->add_option("--recipe", recipe, "k_family (default) or u_family");
  add_common(cmd_construct, construct_flags);

  CLI::App* cmd_verify = app.add_subcommand("verify", "Sweep n, comparing search to formulas");
  cmd_verify->add_option("--k", k, "Wheel parameter")->required();
  cmd_verify->add_option("--from", from, "First n")->required();
  cmd_verify->add_option("--to", to, "Last n")->required();
  cmd_verify->add_option("--budget-ms", verify_budget_ms, "Search budget, in budget units");
  cmd_verify->add_option("--check", check, "wheel (default) or star-path");
  add_common(cmd_verify, verify_flags);

  CLI::App* cmd_decomp = app.add_subcommand("decomp", "Minimal family reaching a target graph");
  cmd_decomp->add_option("--graph", graph_text, "Target graph, graph6")->required();
  int t_raw = -1;
  cmd_decomp->add_option("--t", t_raw, "Isolated-block size (default: target order)");
  add_common(cmd_decomp, decomp_flags);

  CLI::App* cmd_detect = app.add_subcommand("detect", "Find disjoint pattern copies in a graph");
  cmd_detect->add_option("--graph", graph_text, "Host graph, graph6")->required();
  cmd_detect->add_option("--pattern", pattern_text, "Pattern to find")->required();
  cmd_detect->add_option("--copies", copies, "Disjoint copies to request");
  add_common(cmd_detect, detect_flags);

  CLI::App* cmd_convert = app.add_subcommand("convert", "Re-encode or canonicalize graph6");
  cmd_convert->add_option("--graph", graph_text, "Graph, graph6")->required();
  cmd_convert->add_flag("--canonical", canonical, "Emit the canonical labeling's encoding");
  add_common(cmd_convert, convert_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_turan->parsed()) {
      if (cmd_turan->count("--budget-ms") > 0) turan_budget_ms = turan_budget_raw;
      return run_turan(n, pattern_text, method_text, seed, restarts, turan_budget_ms,
                       turan_flags);
    }
    if (cmd_construct->parsed()) {
      if (recipe != "k_family" && recipe != "u_family") {
        throw turan::argument_error("unknown recipe '" + recipe +
                                    "'; expected k_family or u_family");
      }
      return run_construct(n, k, recipe, construct_flags);
    }
    if (cmd_verify->parsed()) return run_verify(k, from, to, verify_budget_ms, check, verify_flags);
    if (cmd_decomp->parsed()) {
      if (cmd_decomp->count("--t") > 0) decomp_t = t_raw;
      return run_decomp(graph_text, decomp_t, decomp_flags);
    }
    if (cmd_detect->parsed()) return run_detect(graph_text, pattern_text, copies, detect_flags);
    if (cmd_convert->parsed()) return run_convert(graph_text, canonical, convert_flags);
  } catch (const turan::argument_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const turan::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const turan::capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const turan::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
