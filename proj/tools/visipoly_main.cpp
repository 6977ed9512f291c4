#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "visipoly/census.hpp"
#include "visipoly/corona_formula.hpp"
#include "visipoly/cq_visibility.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph_spec.hpp"
#include "visipoly/visibility.hpp"

namespace {

using namespace visipoly;

EnumerationLimits limits_from_env() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("VISIPOLY_MAX_N")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) limits.max_vertices = cap;
    } catch (const std::exception&) {
      // ignore malformed override, keep the default
    }
  }
  return limits;
}

VertexSet parse_vertex_list(const std::string& text, int universe) {
  VertexSet out(universe);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    try {
      out.add(std::stoi(item));
    } catch (const std::invalid_argument&) {
      throw InvalidArgument("bad vertex '" + item + "' in list '" + text + "'");
    } catch (const std::out_of_range&) {
      throw InvalidArgument("bad vertex '" + item + "' in list '" + text + "'");
    }
    pos = end + 1;
  }
  return out;
}

int run_poly(const std::string& spec, int max_diameter, const EnumerationLimits& limits) {
  const Graph g = resolve_graph_spec(spec);
  const Polynomial p = max_diameter < 0 ? visibility_polynomial(g, limits)
                                        : restricted_visibility_polynomial(g, max_diameter, limits);
  std::cout << p.str() << '\n';
  return 0;
}

int run_mu(const std::string& spec, const EnumerationLimits& limits) {
  std::cout << mu(resolve_graph_spec(spec), limits) << '\n';
  return 0;
}

int run_corona_poly(const std::string& g_spec, const std::string& h_spec,
                    const std::string& method, bool table, const EnumerationLimits& limits) {
  const Graph g = resolve_graph_spec(g_spec);
  const Graph h = resolve_graph_spec(h_spec);
  CoronaFormulaLimits climits;
  climits.enumeration = limits;

  std::optional<CoronaPolyReport> report;
  if (method != "brute") report = corona_visibility_polynomial(g, h, climits);
  std::optional<Polynomial> brute;
  if (method != "formula") brute = visibility_polynomial(corona(g, h).graph, limits);

  if (report && table) {
    std::cout << "V(G): " << report->v_of_g.str() << '\n';
    std::cout << "copies: " << report->all_copies_term.str() << '\n';
    std::cout << "per-base: " << report->per_base_term.str() << '\n';
    for (const auto& [q, pq] : report->per_q_terms)
      std::cout << "Q=" << q.str() << ": " << pq.str() << '\n';
  }
  if (method == "formula") {
    std::cout << report->formula_poly.str() << '\n';
  } else if (method == "brute") {
    std::cout << brute->str() << '\n';
  } else {
    std::cout << "formula: " << report->formula_poly.str() << '\n';
    std::cout << "brute: " << brute->str() << '\n';
    const bool agree = report->formula_poly == *brute;
    std::cout << (agree ? "AGREE" : "DISAGREE") << '\n';
    if (!agree) return 1;
  }
  return 0;
}

int run_cq(const std::string& g_spec, const std::string& q_list) {
  const Graph g = resolve_graph_spec(g_spec);
  const DistanceMatrix dm = all_pairs_distances(g);
  const VertexSet q = parse_vertex_list(q_list, g.order());
  if (q.empty()) throw InvalidArgument("--q must name at least one vertex");
  const GammaFamily fam = maximal_absolute_cq_sets(g, dm, q);
  if (fam.members.empty()) {
    std::cout << "gamma: none\n";
  } else {
    for (const VertexSet& omega : fam.members) std::cout << "gamma: " << omega.str() << '\n';
  }
  std::cout << "admissible: " << admissible_vertices(g, dm, q).str() << '\n';
  std::cout << "disjoint-visible: " << (is_disjoint_visible(g, dm, q) ? "true" : "false")
            << '\n';
  return 0;
}

int run_absolute_clear(const std::string& spec, const EnumerationLimits& limits) {
  const Graph g = resolve_graph_spec(spec);
  const DistanceMatrix dm = all_pairs_distances(g);
  const ClearnessReport report = check_absolute_clear(g, dm, limits);
  std::cout << "absolute-clear: " << (report.absolute_clear ? "true" : "false") << '\n';
  if (report.witness) std::cout << "witness: " << report.witness->str() << '\n';
  return 0;
}

int run_census(const std::string& path, int jobs, const std::string& out_path,
               const EnumerationLimits& limits) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open census input '" + path + "'");
  CensusOptions options;
  options.jobs = jobs;
  options.limits = limits;
  const CensusResult result = run_census(in, options);

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open census output '" + out_path + "'");
    if (out_path.ends_with(".json"))
      write_census_json(out, result);
    else if (out_path.ends_with(".csv"))
      write_census_csv(out, result);
    else
      throw Error("census output must end in .csv or .json: '" + out_path + "'");
  }
  std::cout << summary_text(result.summary);
  for (const CensusLineError& e : result.errors)
    std::cerr << "line " << e.line << ": " << e.reason << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutual-visibility structure of finite simple graphs"};
  app.require_subcommand(1);

  std::string spec, g_spec, h_spec, q_list, census_file, out_path;
  std::string method = "formula";
  int max_diameter = -1;
  int jobs = 1;
  bool table = false;

  CLI::App* poly_cmd = app.add_subcommand("poly", "visibility polynomial V(G) or V_d(G)");
  poly_cmd->add_option("spec", spec, "graph spec (g6:..., path:n, cycle:n, complete:n, file:..., corona(a,b))")
      ->required();
  poly_cmd->add_option("--max-diameter", max_diameter,
                       "restrict to mutual-visibility sets of diameter <= d");

  CLI::App* mu_cmd = app.add_subcommand("mu", "mutual-visibility number");
  mu_cmd->add_option("spec", spec, "graph spec")->required();

  CLI::App* corona_cmd = app.add_subcommand("corona-poly", "visibility polynomial of corona(G,H)");
  corona_cmd->set_help_flag("--help", "print help");  // frees -h for the --h operand
  corona_cmd->add_option("--g", g_spec, "graph spec for G")->required();
  corona_cmd->add_option("--h", h_spec, "graph spec for H")->required();
  corona_cmd->add_option("--method", method, "formula | brute | both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  corona_cmd->add_flag("--table", table, "print the per-Q contribution table");

  CLI::App* cq_cmd = app.add_subcommand("cq", "maximal absolute c_Q-visible sets");
  cq_cmd->set_help_flag("--help", "print help");
  cq_cmd->add_option("--g", g_spec, "graph spec")->required();
  cq_cmd->add_option("--q", q_list, "comma-separated 0-indexed vertices of Q")->required();

  CLI::App* clear_cmd = app.add_subcommand("absolute-clear", "absolute-clearness verdict");
  clear_cmd->add_option("spec", spec, "graph spec")->required();

  CLI::App* census_cmd = app.add_subcommand("census", "batch statistics over a .g6 file");
  census_cmd->add_option("file", census_file, "input file, one graph6 record per line")
      ->required();
  census_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  census_cmd->add_option("--out", out_path, "write records to a .csv or .json file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; usage errors exit 2
  }

  const EnumerationLimits limits = limits_from_env();
  try {
    if (poly_cmd->parsed()) return run_poly(spec, max_diameter, limits);
    if (mu_cmd->parsed()) return run_mu(spec, limits);
    if (corona_cmd->parsed()) return run_corona_poly(g_spec, h_spec, method, table, limits);
    if (cq_cmd->parsed()) return run_cq(g_spec, q_list);
    if (clear_cmd->parsed()) return run_absolute_clear(spec, limits);
    if (census_cmd->parsed()) return run_census(census_file, jobs, out_path, limits);
  } catch (const visipoly::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
