#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orient/cycle_partition.hpp"
#include "orient/errors.hpp"
#include "orient/expander.hpp"
#include "orient/extremal.hpp"
#include "orient/graph.hpp"
#include "orient/graph_io.hpp"
#include "orient/pattern.hpp"
#include "orient/solver.hpp"
#include "orient/winding.hpp"

using nlohmann::json;
using namespace orient;

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNegative = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitInputError = 3;

std::string resolve_out(const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  const char* dir = std::getenv("ORIENT_OUT_DIR");
  if (dir == nullptr || *dir == '\0') return path;
  std::string base(dir);
  if (base.back() != '/') base.push_back('/');
  return base + path;
}

std::string timestamp_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// Reports are JSON lines appended to the target file; the config block plus
// seed makes a run reproducible, and the timestamp is the single
// non-deterministic key.
void write_report(const std::string& out, const json& config, const json& result) {
  if (out.empty()) return;
  json report;
  report["config"] = config;
  report["timestamp"] = timestamp_now();
  report["result"] = result;
  std::string path = resolve_out(out);
  std::ofstream file(path, std::ios::app);
  if (!file) throw InputError("cannot open report file: " + path);
  file << report.dump() << "\n";
}

json embedding_json(const std::optional<CycleEmbedding>& emb) {
  if (!emb) return nullptr;
  return json{{"vertices", emb->vertices}, {"pattern", emb->pattern.to_string()}};
}

std::pair<int, int> parse_edge(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw InputError("edge must be given as \"u,v\", got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("edge must be given as \"u,v\", got '" + text + "'");
  }
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InputError("vertex list entry '" + item + "' is not an integer");
    }
  }
  return out;
}

const char* status_name(CellStatus s) {
  switch (s) {
    case CellStatus::Found: return "found";
    case CellStatus::NotFound: return "not-found";
    case CellStatus::Indeterminate: return "indeterminate";
    default: return "skipped-infeasible";
  }
}

struct Args {
  std::string graph_file, partition_file, out, pattern, dot;
  std::string edge, forbidden, paths_spec, mode = "exhaustive";
  std::string table, tsv;
  int n = 0, min_semidegree = 0, attempts = 16, tmin = 3, tmax = 0, k = 8, trials = 0;
  int threads = 1, max_order = 0;
  long long budget = -1;
  double nu = 0.05, tau = 0.2, delta = 0.1, c = 3.0, eps = 0.05;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int run_gen_extremal(const Args& a) {
  if (!a.table.empty()) {
    auto colon = a.table.find(':');
    if (colon == std::string::npos) throw InputError("--table expects A:B");
    int lo, hi;
    try {
      lo = std::stoi(a.table.substr(0, colon));
      hi = std::stoi(a.table.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("--table expects integer bounds A:B, got '" + a.table + "'");
    }
    std::ofstream tsv(resolve_out(a.tsv.empty() ? "extremal_table.tsv" : a.tsv));
    tsv << "n\tmin_semidegree\t|W|\t|X|=|Z|\t|Y|\n";
    for (int n = lo; n <= hi; ++n) {
      ExtremalSizes sz = extremal_sizes(n);
      tsv << n << "\t" << sz.min_semidegree << "\t" << sz.w << "\t" << sz.x << "\t" << sz.y
          << "\n";
    }
  }
  ExtremalInstance inst = build_extremal(a.n, a.seed);
  if (!a.out.empty()) save_graph(inst.graph, resolve_out(a.out));
  if (!a.partition_file.empty()) save_partition(inst.partition, resolve_out(a.partition_file));
  if (!a.dot.empty()) {
    std::ofstream dot(resolve_out(a.dot));
    dot << graph_to_dot(inst.graph);
  }
  auto s = semidegree(inst.graph);
  std::cout << "extremal n=" << a.n << " delta0=" << s.min_semidegree
            << " |W|=" << inst.partition.size(SetId::W)
            << " |X|=" << inst.partition.size(SetId::X)
            << " |Y|=" << inst.partition.size(SetId::Y)
            << " |Z|=" << inst.partition.size(SetId::Z) << "\n";
  return kExitFound;
}

int run_gen_random(const Args& a) {
  OrientedGraph g = random_oriented_graph(a.n, a.min_semidegree, a.seed, a.attempts);
  if (!a.out.empty()) save_graph(g, resolve_out(a.out));
  std::cout << "random n=" << a.n << " delta0=" << semidegree(g).min_semidegree
            << " edges=" << g.edge_count() << "\n";
  return kExitFound;
}

int run_solve(const Args& a, bool use_oracle) {
  OrientedGraph g = load_graph(a.graph_file);
  Pattern p = Pattern::parse(a.pattern);
  SearchResult r =
      use_oracle ? oracle_enumerate(g, p) : find_oriented_cycle(g, p, a.budget, a.threads);
  json config{{"command", use_oracle ? "oracle" : "solve"},
              {"graph", a.graph_file},
              {"pattern", a.pattern},
              {"budget", a.budget},
              {"threads", a.threads}};
  json result{{"verdict", to_string(r.verdict)},
              {"nodes_expanded", r.nodes_expanded},
              {"embedding", embedding_json(r.embedding)}};
  write_report(a.out, config, result);
  std::cout << to_string(r.verdict) << " (" << r.nodes_expanded << " nodes)\n";
  switch (r.verdict) {
    case Verdict::Found: return kExitFound;
    case Verdict::NonExistent: return kExitNegative;
    default: return kExitIndeterminate;
  }
}

int run_sweep(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  int tmax = a.tmax > 0 ? a.tmax : g.n();
  PancyclicityReport report = pancyclicity_sweep(g, a.tmin, tmax, a.budget, a.threads);
  json cells = json::array();
  int found = 0, missing = 0;
  for (const auto& cell : report.cells) {
    cells.push_back(json{{"t", cell.t},
                         {"pattern", cell.pattern},
                         {"status", status_name(cell.status)},
                         {"embedding", embedding_json(cell.embedding)}});
    found += cell.status == CellStatus::Found;
    missing += cell.status == CellStatus::NotFound;
  }
  json config{{"command", "sweep"}, {"graph", a.graph_file}, {"tmin", a.tmin},
              {"tmax", tmax},       {"budget", a.budget},    {"threads", a.threads}};
  write_report(a.out, config, json{{"cells", cells}});
  std::cout << "sweep: " << found << " found, " << missing << " not found, "
            << report.cells.size() << " cells\n";
  return kExitFound;
}

int run_check_expander(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  ExpanderMode mode;
  if (a.mode == "exhaustive")
    mode = ExpanderMode::Exhaustive;
  else if (a.mode == "sampled")
    mode = ExpanderMode::Sampled;
  else
    throw InputError("--mode must be 'exhaustive' or 'sampled'");
  if (mode == ExpanderMode::Sampled && !a.seed_given)
    throw InputError("sampled mode requires an explicit --seed");
  std::optional<QuadPartition> hint;
  if (!a.partition_file.empty()) hint = load_partition(g.n(), a.partition_file);
  ExpanderVerdict v = is_robust_outexpander(g, a.nu, a.tau, mode, a.budget < 0 ? 0 : a.budget,
                                            a.seed, hint ? &*hint : nullptr, a.threads);
  json config{{"command", "check-expander"},
              {"graph", a.graph_file},
              {"nu", a.nu},
              {"tau", a.tau},
              {"mode", a.mode},
              {"budget", a.budget},
              {"seed", a.seed},
              {"threads", a.threads}};
  json result{{"is_expander", v.is_expander},
              {"vacuous", v.vacuous},
              {"tested", v.tested},
              {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
  write_report(a.out, config, result);
  if (v.is_expander && mode == ExpanderMode::Sampled)
    std::cout << "no witness found (sampled mode, non-certifying)"
              << (v.vacuous ? " (vacuous: no sets tested)" : "") << "\n";
  else
    std::cout << (v.is_expander ? "robust outexpander" : "not a robust outexpander") << "\n";
  return v.is_expander ? kExitFound : kExitNegative;
}

int run_check_partition(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  QuadPartition part = load_partition(g.n(), a.partition_file);
  EPReport report = check_extremal_partition(g, part, a.delta, a.c);
  json props = json::array();
  for (int i = 0; i < 7; ++i)
    props.push_back(json{{"property", "EP" + std::to_string(i + 1)},
                         {"pass", report.prop[i].pass},
                         {"min_passing_C", report.prop[i].min_passing_c}});
  json config{{"command", "check-partition"},
              {"graph", a.graph_file},
              {"partition", a.partition_file},
              {"delta", a.delta},
              {"C", a.c}};
  write_report(a.out, config,
               json{{"properties", props},
                    {"bad_count", report.bad_count},
                    {"all_pass", report.all_pass}});
  std::cout << (report.all_pass ? "all EP1-EP7 pass" : "some properties fail") << ", "
            << report.bad_count << " bad vertices\n";
  return report.all_pass ? kExitFound : kExitNegative;
}

int run_special_edges(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  QuadPartition part = load_partition(g.n(), a.partition_file);
  auto edges = find_special_edges(g, part);
  auto disjoint = disjoint_special_edges(g, part);
  json edge_list = json::array();
  for (auto [u, v] : edges) edge_list.push_back({u, v});
  json witness = json::array();
  for (auto [u, v] : disjoint.witness) witness.push_back({u, v});
  json config{{"command", "special-edges"},
              {"graph", a.graph_file},
              {"partition", a.partition_file}};
  write_report(a.out, config,
               json{{"edges", edge_list},
                    {"disjoint_count", disjoint.count},
                    {"disjoint_witness", witness}});
  std::cout << edges.size() << " special edges, disjoint count " << disjoint.count << "\n";
  return edges.empty() ? kExitNegative : kExitFound;
}

int run_proper_path(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  QuadPartition part = load_partition(g.n(), a.partition_file);
  auto edge = parse_edge(a.edge);
  auto forbidden = parse_vertex_list(a.forbidden);
  auto path = extend_to_proper_path(g, part, edge, forbidden, a.delta, a.c);
  json config{{"command", "proper-path"},
              {"graph", a.graph_file},
              {"partition", a.partition_file},
              {"edge", {edge.first, edge.second}},
              {"forbidden", forbidden},
              {"delta", a.delta},
              {"C", a.c}};
  write_report(a.out, config, json{{"path", path}});
  std::cout << "proper 13-path:";
  for (int v : path) std::cout << " " << v;
  std::cout << "\n";
  return kExitFound;
}

int run_balanced_system(const Args& a) {
  OrientedGraph g = load_graph(a.graph_file);
  QuadPartition part = load_partition(g.n(), a.partition_file);
  MatchingReport matching = find_matching_xy_wx(g, part);
  if (!matching.sufficient) {
    std::cout << "matching of size " << matching.edges.size() << " below required "
              << matching.required << "\n";
    return kExitNegative;
  }
  matching.edges.resize(matching.required);
  PathSystem system = find_balanced_path_system(g, part, matching.edges, a.delta, a.c);
  std::string invalid = validate_path_system(g, part, matching.edges, system, a.delta, a.c);
  if (!invalid.empty()) throw ConstructionError("balanced-system postcondition: " + invalid);
  json match_json = json::array();
  for (auto [u, v] : matching.edges) match_json.push_back({u, v});
  json config{{"command", "balanced-system"},
              {"graph", a.graph_file},
              {"partition", a.partition_file},
              {"delta", a.delta},
              {"C", a.c}};
  write_report(a.out, config, json{{"matching", match_json}, {"paths", system.paths}});
  std::cout << system.paths.size() << " directed 13-paths balance X and Z\n";
  return kExitFound;
}

int run_wind_sim(const Args& a) {
  ReducedCycle f{a.k};
  auto paths = build_paths(parse_path_spec(a.paths_spec));
  auto stats = concentration_experiment(f, paths, a.trials, a.eps, a.seed, a.max_order);
  json config{{"command", "wind-sim"}, {"k", a.k},           {"paths", a.paths_spec},
              {"eps", a.eps},          {"trials", a.trials}, {"seed", a.seed}};
  json result{{"total_vertices", stats.total_vertices},
              {"conservation_ok", stats.conservation_ok},
              {"within", stats.within},
              {"within_fraction", stats.within_fraction},
              {"mean_load", stats.mean_load},
              {"max_deviation", stats.max_deviation}};
  write_report(a.out, config, result);
  std::cout << "winding: " << stats.within << "/" << stats.trials << " trials within eps*n"
            << (stats.conservation_ok ? "" : " (conservation violated!)") << "\n";
  return kExitFound;
}

int run_threshold_exp(const Args& a) {
  ThresholdSummary summary = threshold_experiment(a.n, a.trials, a.seed, a.budget, a.threads);
  json rows = json::array();
  bool consistent = true;
  for (const auto& row : summary.rows) {
    rows.push_back(json{{"pattern", row.pattern},
                        {"found", row.found},
                        {"not_found", row.not_found},
                        {"indeterminate", row.indeterminate},
                        {"oracle_consistent", row.oracle_consistent}});
    consistent = consistent && row.oracle_consistent;
  }
  json config{{"command", "threshold-exp"}, {"n", a.n},           {"trials", a.trials},
              {"seed", a.seed},             {"budget", a.budget}, {"threads", a.threads}};
  write_report(a.out, config,
               json{{"min_semidegree", summary.min_semidegree},
                    {"oracle_verified", summary.oracle_verified},
                    {"rows", rows}});
  std::cout << "threshold experiment: " << summary.rows.size() << " patterns x " << a.trials
            << " trials, bound " << summary.min_semidegree
            << (summary.oracle_verified ? "" : " (unverified by oracle)")
            << (consistent ? "" : " ORACLE MISMATCH") << "\n";
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oriented Hamilton cycle toolbox"};
  app.require_subcommand(1);
  Args a;

  auto add_seed = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--seed", a.seed, "RNG seed (all randomness is seeded)");
    if (required) opt->required();
    opt->each([&](const std::string&) { a.seed_given = true; });
  };

  auto* gen_extremal = app.add_subcommand("gen-extremal", "build the extremal family instance");
  gen_extremal->add_option("--n", a.n, "order")->required();
  add_seed(gen_extremal, true);
  gen_extremal->add_option("--out", a.out, "graph JSON output");
  gen_extremal->add_option("--partition-out", a.partition_file, "partition JSON output");
  gen_extremal->add_option("--dot", a.dot, "DOT export");
  gen_extremal->add_option("--table", a.table, "emit the size table for a range A:B");
  gen_extremal->add_option("--tsv", a.tsv, "TSV output for --table");

  auto* gen_random = app.add_subcommand("gen-random", "sample an oriented graph");
  gen_random->add_option("--n", a.n)->required();
  gen_random->add_option("--min-semidegree", a.min_semidegree)->required();
  add_seed(gen_random, true);
  gen_random->add_option("--attempts", a.attempts);
  gen_random->add_option("--out", a.out, "graph JSON output");

  auto* solve = app.add_subcommand("solve", "search for a cycle with the given orientation");
  solve->add_option("--graph", a.graph_file)->required();
  solve->add_option("--pattern", a.pattern)->required();
  solve->add_option("--budget", a.budget, "node-expansion budget (-1 unlimited)");
  solve->add_option("--threads", a.threads);
  solve->add_option("--out", a.out, "report file (appended)");

  auto* oracle = app.add_subcommand("oracle", "exhaustive brute-force check (|G| <= 11)");
  oracle->add_option("--graph", a.graph_file)->required();
  oracle->add_option("--pattern", a.pattern)->required();
  oracle->add_option("--out", a.out);

  auto* sweep = app.add_subcommand("sweep", "all canonical patterns over a length range");
  sweep->add_option("--graph", a.graph_file)->required();
  sweep->add_option("--tmin", a.tmin);
  sweep->add_option("--tmax", a.tmax);
  sweep->add_option("--budget-per-query", a.budget);
  sweep->add_option("--threads", a.threads);
  sweep->add_option("--out", a.out)->required();

  auto* check_expander = app.add_subcommand("check-expander", "robust outexpander decision");
  check_expander->add_option("--graph", a.graph_file)->required();
  check_expander->add_option("--nu", a.nu)->required();
  check_expander->add_option("--tau", a.tau)->required();
  check_expander->add_option("--mode", a.mode, "exhaustive | sampled");
  check_expander->add_option("--budget", a.budget, "sample budget in sampled mode");
  add_seed(check_expander, false);
  check_expander->add_option("--threads", a.threads);
  check_expander->add_option("--partition", a.partition_file, "structured candidate hint");
  check_expander->add_option("--out", a.out);

  auto* check_partition = app.add_subcommand("check-partition", "EP1-EP7 report");
  check_partition->add_option("--graph", a.graph_file)->required();
  check_partition->add_option("--partition", a.partition_file)->required();
  check_partition->add_option("--delta", a.delta)->required();
  check_partition->add_option("--C", a.c)->required();
  check_partition->add_option("--out", a.out);

  auto* special = app.add_subcommand("special-edges", "edges in E(WuZ,YuZ) u E(XuY,WuX)");
  special->add_option("--graph", a.graph_file)->required();
  special->add_option("--partition", a.partition_file)->required();
  special->add_option("--out", a.out);

  auto* proper = app.add_subcommand("proper-path", "extend a special edge to a 13-path");
  proper->add_option("--graph", a.graph_file)->required();
  proper->add_option("--partition", a.partition_file)->required();
  proper->add_option("--edge", a.edge, "special edge \"u,v\"")->required();
  proper->add_option("--forbidden", a.forbidden, "comma-separated vertices to avoid");
  proper->add_option("--delta", a.delta);
  proper->add_option("--C", a.c);
  proper->add_option("--out", a.out);

  auto* balanced = app.add_subcommand("balanced-system", "matching plus 13-path system");
  balanced->add_option("--graph", a.graph_file)->required();
  balanced->add_option("--partition", a.partition_file)->required();
  balanced->add_option("--delta", a.delta);
  balanced->add_option("--C", a.c);
  balanced->add_option("--out", a.out);

  auto* wind = app.add_subcommand("wind-sim", "randomized winding concentration experiment");
  wind->add_option("--k", a.k)->required();
  wind->add_option("--paths", a.paths_spec, "e.g. 1000x10 or 500x10,500x8:alt")->required();
  wind->add_option("--eps", a.eps)->required();
  wind->add_option("--trials", a.trials)->required();
  add_seed(wind, true);
  wind->add_option("--max-order", a.max_order,
                   "reject paths of order above this cap (0 = no cap)");
  wind->add_option("--out", a.out);

  auto* threshold = app.add_subcommand("threshold-exp", "sweep samples at the degree bound");
  threshold->add_option("--n", a.n)->required();
  threshold->add_option("--trials", a.trials)->required();
  add_seed(threshold, true);
  threshold->add_option("--budget", a.budget);
  threshold->add_option("--threads", a.threads);
  threshold->add_option("--out", a.out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_extremal->parsed()) return run_gen_extremal(a);
    if (gen_random->parsed()) return run_gen_random(a);
    if (solve->parsed()) return run_solve(a, false);
    if (oracle->parsed()) return run_solve(a, true);
    if (sweep->parsed()) return run_sweep(a);
    if (check_expander->parsed()) return run_check_expander(a);
    if (check_partition->parsed()) return run_check_partition(a);
    if (special->parsed()) return run_special_edges(a);
    if (proper->parsed()) return run_proper_path(a);
    if (balanced->parsed()) return run_balanced_system(a);
    if (wind->parsed()) return run_wind_sim(a);
    if (threshold->parsed()) return run_threshold_exp(a);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const GenerationError& e) {
    std::cerr << "generation failed: " << e.what() << "\n";
    return kExitIndeterminate;
  } catch (const ConstructionError& e) {
    std::cerr << "construction failed: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
