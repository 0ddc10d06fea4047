// Command-line front end: graph generation, cost evaluation, infection
// spread, equilibrium checks and solvers, optimum strategies, price of
// anarchy, and the scripted experiment scenarios.
//
// Exit codes: 0 success, 1 usage error, 2 precondition violation,
// 3 inconclusive Monte Carlo certification.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "inoc/contagion.hpp"
#include "inoc/equilibria.hpp"
#include "inoc/errors.hpp"
#include "inoc/experiments.hpp"
#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"
#include "inoc/optimum.hpp"
#include "inoc/reports.hpp"

#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInconclusive = 3;

struct CommonOpts {
  std::string graph_path;
  std::string C = "1";
  std::string L = "1";
  int threshold = 1;
  std::string mode = "exact";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::string out;
  double tol = 1e-9;
  int cap = inoc::kDefaultEnumerationCap;
};

void add_cost_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--C", opts.C, "inoculation cost (decimal)");
  cmd->add_option("--L", opts.L, "infection cost (decimal)");
  cmd->add_option("--threshold", opts.threshold, "contagion threshold (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
}

void add_eval_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "exact or mc")->check(CLI::IsMember({"exact", "mc"}));
  cmd->add_option("--samples", opts.samples, "monte carlo sample count");
  cmd->add_option("--seed", opts.seed, "rng seed");
}

inoc::EvalMode eval_mode(const CommonOpts& opts) {
  return opts.mode == "exact" ? inoc::EvalMode::exact : inoc::EvalMode::monte_carlo;
}

void emit(const std::string& payload, const std::string& out) {
  if (out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out);
  inoc::require(static_cast<bool>(file), "cannot write output file: " + out);
  file << payload;
}

inoc::Graph load_graph(const CommonOpts& opts) {
  inoc::require(!opts.graph_path.empty(), "--graph is required");
  inoc::Graph g = inoc::read_edge_list_file(opts.graph_path);
  // sidecar tags make generator guarantees (tree, vertex-transitive) durable
  std::ifstream meta(opts.graph_path + ".meta.json");
  if (meta) {
    nlohmann::json j;
    try {
      meta >> j;
    } catch (const nlohmann::json::exception&) {
      return g;
    }
    inoc::GraphTags tags;
    if (j.contains("tags"))
      for (const auto& tag : j["tags"]) {
        if (tag == "vertex_transitive") tags.vertex_transitive = true;
        if (tag == "tree") tags.tree = true;
        if (tag == "planar_hint") tags.planar_hint = true;
      }
    return inoc::Graph::from_edges(g.node_count(), g.edge_list(), tags);
  }
  return g;
}

std::vector<inoc::NodeId> load_branch_nodes(const std::string& graph_path,
                                            const std::string& meta_path) {
  std::string path = meta_path.empty() ? graph_path + ".meta.json" : meta_path;
  std::ifstream meta(path);
  inoc::require(static_cast<bool>(meta), "cannot open metadata file: " + path);
  nlohmann::json j;
  try {
    meta >> j;
  } catch (const nlohmann::json::exception& err) {
    throw inoc::PreconditionError(std::string("metadata is not valid JSON: ") + err.what());
  }
  inoc::require(j.contains("branch_nodes"), "metadata carries no branch_nodes");
  return j["branch_nodes"].get<std::vector<inoc::NodeId>>();
}

std::optional<std::pair<int, int>> load_grid_shape(const std::string& graph_path) {
  std::ifstream meta(graph_path + ".meta.json");
  if (!meta) return std::nullopt;
  nlohmann::json j;
  try {
    meta >> j;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!j.contains("grid")) return std::nullopt;
  return std::make_pair(j["grid"]["rows"].get<int>(), j["grid"]["cols"].get<int>());
}

std::vector<inoc::NodeId> parse_node_list(const std::string& text) {
  std::vector<inoc::NodeId> nodes;
  std::string current;
  for (char c : text + ",") {
    if (c == ',') {
      if (!current.empty()) nodes.push_back(std::stoi(current));
      current.clear();
    } else {
      current += c;
    }
  }
  return nodes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"inoculation game toolkit"};
  app.require_subcommand(1);

  // generate
  CommonOpts gen_opts;
  std::string gen_family = "star";
  int gen_n = 0, gen_rows = 0, gen_cols = 0, gen_delta = 0;
  double gen_p = 0.0;
  auto* gen = app.add_subcommand("generate", "construct a graph family and write it");
  gen->add_option("--family", gen_family, "graph family")->required();
  gen->add_option("--n", gen_n, "node count");
  gen->add_option("--rows", gen_rows, "grid rows");
  gen->add_option("--cols", gen_cols, "grid cols");
  gen->add_option("--delta", gen_delta, "target max degree (subdivided_regular)");
  gen->add_option("--p", gen_p, "edge probability (gnp)");
  gen->add_option("--seed", gen_opts.seed, "rng seed");
  gen->add_option("--out", gen_opts.out, "output edge-list path")->required();

  // cost
  CommonOpts cost_opts;
  std::string cost_profile_path, cost_secure;
  auto* cost = app.add_subcommand("cost", "evaluate the social cost of a profile");
  cost->add_option("--graph", cost_opts.graph_path, "edge-list file")->required();
  add_cost_flags(cost, cost_opts);
  add_eval_flags(cost, cost_opts);
  cost->add_option("--profile", cost_profile_path, "JSON array of n probabilities");
  cost->add_option("--secure", cost_secure, "comma-separated secure nodes (pure profile)");
  cost->add_option("--cap", cost_opts.cap, "exact-enumeration cap");
  cost->add_option("--out", cost_opts.out, "output path (default stdout)");

  // spread
  CommonOpts spread_opts;
  std::string spread_secure, spread_starts;
  auto* spr = app.add_subcommand("spread", "run one infection from chosen starts");
  spr->add_option("--graph", spread_opts.graph_path, "edge-list file")->required();
  spr->add_option("--threshold", spread_opts.threshold, "contagion threshold (1 or 2)")
      ->check(CLI::IsMember({1, 2}));
  spr->add_option("--secure", spread_secure, "comma-separated secure nodes");
  spr->add_option("--starts", spread_starts, "comma-separated start nodes")->required();
  spr->add_option("--out", spread_opts.out, "output path (default stdout)");

  // nash

  auto* nash = app.add_subcommand("nash", "equilibrium checks and solvers");
  nash->require_subcommand(1);

  CommonOpts check_opts;
  std::string check_profile_path;
  auto* check = nash->add_subcommand("check", "verify the equilibrium conditions");
  check->add_option("--graph", check_opts.graph_path, "edge-list file")->required();
  add_cost_flags(check, check_opts);
  add_eval_flags(check, check_opts);
  check->add_option("--profile", check_profile_path, "JSON array of n probabilities")->required();
  check->add_option("--tol", check_opts.tol, "tolerance");
  check->add_option("--cap", check_opts.cap, "exact-enumeration cap");
  check->add_option("--out", check_opts.out, "output path (default stdout)");

  CommonOpts dyn_opts;
  std::string dyn_init = "zeros", dyn_order = "round_robin";
  int dyn_max_rounds = -1;
  auto* dyn = nash->add_subcommand("dynamics", "asynchronous best responses to a fixpoint");
  dyn->add_option("--graph", dyn_opts.graph_path, "edge-list file")->required();
  add_cost_flags(dyn, dyn_opts);
  dyn->add_option("--init", dyn_init, "zeros, ones, or a profile JSON path");
  dyn->add_option("--order", dyn_order, "round_robin or random")
      ->check(CLI::IsMember({"round_robin", "random"}));
  dyn->add_option("--seed", dyn_opts.seed, "rng seed (random order)");
  dyn->add_option("--max-rounds", dyn_max_rounds, "pass limit (default n*n)");
  dyn->add_option("--out", dyn_opts.out, "output path (default stdout)");

  CommonOpts worst_opts;
  auto* worst = nash->add_subcommand("worst", "exhaustive worst pure equilibrium");
  worst->add_option("--graph", worst_opts.graph_path, "edge-list file")->required();
  add_cost_flags(worst, worst_opts);
  worst->add_option("--cap", worst_opts.cap, "exhaustive cap");
  worst->add_option("--out", worst_opts.out, "output path (default stdout)");

  CommonOpts fstar_opts;
  int fstar_n = 0;
  auto* fstar = nash->add_subcommand("fractional-star", "interior star equilibrium");
  fstar->add_option("--n", fstar_n, "node count")->required();
  add_cost_flags(fstar, fstar_opts);
  fstar->add_option("--out", fstar_opts.out, "output path (default stdout)");

  CommonOpts funi_opts;
  auto* funi = nash->add_subcommand("fractional-uniform", "uniform interior equilibrium");
  funi->add_option("--graph", funi_opts.graph_path, "edge-list file")->required();
  add_cost_flags(funi, funi_opts);
  add_eval_flags(funi, funi_opts);
  funi->add_option("--tol", funi_opts.tol, "|S - t| tolerance");
  funi->add_option("--cap", funi_opts.cap, "exact-enumeration cap");
  funi->add_option("--out", funi_opts.out, "output path (default stdout)");

  // optimum
  CommonOpts opt_opts;
  std::string opt_method = "brute", opt_meta;
  int opt_target = 0;
  auto* opt = app.add_subcommand("optimum", "social-optimum search and heuristics");
  opt->add_option("--graph", opt_opts.graph_path, "edge-list file")->required();
  add_cost_flags(opt, opt_opts);
  opt->add_option("--method", opt_method, "brute|tree-sep|recursive-sep|subdivision|greedy")
      ->check(CLI::IsMember({"brute", "tree-sep", "recursive-sep", "subdivision", "greedy"}));
  opt->add_option("--target-components", opt_target, "recursive-sep split target (power of 2)");
  opt->add_option("--meta", opt_meta, "sidecar metadata path (subdivision)");
  opt->add_option("--cap", opt_opts.cap, "exhaustive cap");
  opt->add_option("--out", opt_opts.out, "output path (default stdout)");

  // poa
  CommonOpts poa_opts;
  std::string poa_opt_method = "brute", poa_ne_method = "exhaustive", poa_meta;
  int poa_target = 0;
  auto* poa_cmd = app.add_subcommand("poa", "price of anarchy report");
  poa_cmd->add_option("--graph", poa_opts.graph_path, "edge-list file")->required();
  add_cost_flags(poa_cmd, poa_opts);
  poa_cmd->add_option("--opt-method", poa_opt_method,
                      "brute|tree-sep|recursive-sep|subdivision|greedy")
      ->check(CLI::IsMember({"brute", "tree-sep", "recursive-sep", "subdivision", "greedy"}));
  poa_cmd->add_option("--ne-method", poa_ne_method, "exhaustive|analytic")
      ->check(CLI::IsMember({"exhaustive", "analytic"}));
  poa_cmd->add_option("--target-components", poa_target, "recursive-sep split target");
  poa_cmd->add_option("--meta", poa_meta, "sidecar metadata path (subdivision)");
  poa_cmd->add_option("--cap", poa_opts.cap, "exhaustive cap");
  poa_cmd->add_option("--out", poa_opts.out, "output path (default stdout)");

  // dismantle
  CommonOpts dis_opts;
  double dis_delta = 0.05, dis_eps = 0.1;
  int dis_trials = 20;
  auto* dis = app.add_subcommand("dismantle", "probe removal sets for surviving components");
  dis->add_option("--graph", dis_opts.graph_path, "edge-list file")->required();
  dis->add_option("--delta", dis_delta, "removal fraction");
  dis->add_option("--eps", dis_eps, "surviving-component fraction");
  dis->add_option("--trials", dis_trials, "random removal sets");
  dis->add_option("--seed", dis_opts.seed, "rng seed");
  dis->add_option("--out", dis_opts.out, "output path (default stdout)");

  // experiment
  CommonOpts exp_opts;
  std::string exp_scenario, exp_plot;
  bool exp_reproducible = false;
  auto* exp = app.add_subcommand("experiment", "run a scripted scenario grid");
  exp->add_option("--scenario", exp_scenario, "scenario name (or 'list')")->required();
  exp->add_option("--seed", exp_opts.seed, "rng seed");
  exp->add_option("--out", exp_opts.out, "CSV output path");
  exp->add_option("--plot", exp_plot, "also write an SVG chart here");
  exp->add_flag("--reproducible", exp_reproducible, "suppress the timestamp header line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      inoc::FamilySpec spec;
      spec.family = inoc::family_from_string(gen_family);
      spec.n = gen_n;
      spec.rows = gen_rows;
      spec.cols = gen_cols;
      spec.degree = gen_delta;
      spec.edge_probability = gen_p;
      spec.seed = gen_opts.seed;
      auto gg = inoc::generate(spec);
      inoc::write_edge_list_file(gg.graph, gen_opts.out);
      emit(inoc::sidecar_json(gg), gen_opts.out + ".meta.json");
      std::cout << "wrote " << gen_opts.out << " (" << gg.graph.node_count() << " nodes, "
                << gg.graph.edge_count() << " edges)\n";
    } else if (cost->parsed()) {
      auto g = load_graph(cost_opts);
      auto cfg = inoc::GameConfig::from_decimal(cost_opts.C, cost_opts.L, cost_opts.threshold);
      inoc::StrategyProfile profile;
      if (!cost_profile_path.empty())
        profile = inoc::read_profile_json(cost_profile_path, g.node_count());
      else
        profile =
            inoc::StrategyProfile::pure_secure(g.node_count(), parse_node_list(cost_secure));
      auto report = inoc::cost_profile(g, cfg, profile, eval_mode(cost_opts), cost_opts.samples,
                                       cost_opts.seed, cost_opts.cap);
      emit(inoc::to_json(report), cost_opts.out);
    } else if (spr->parsed()) {
      auto g = load_graph(spread_opts);
      auto outcome = inoc::spread(g, parse_node_list(spread_secure),
                                  parse_node_list(spread_starts), spread_opts.threshold);
      emit(inoc::to_json(outcome), spread_opts.out);
    } else if (check->parsed()) {
      auto g = load_graph(check_opts);
      auto cfg = inoc::GameConfig::from_decimal(check_opts.C, check_opts.L, check_opts.threshold);
      auto profile = inoc::read_profile_json(check_profile_path, g.node_count());
      auto report = inoc::is_nash(g, cfg, profile, check_opts.tol, eval_mode(check_opts),
                                  check_opts.samples, check_opts.seed, check_opts.cap);
      emit(inoc::to_json(report), check_opts.out);
      if (report.verdict == inoc::Verdict::inconclusive) return kExitInconclusive;
    } else if (dyn->parsed()) {
      auto g = load_graph(dyn_opts);
      auto cfg = inoc::GameConfig::from_decimal(dyn_opts.C, dyn_opts.L, dyn_opts.threshold);
      inoc::StrategyProfile init;
      if (dyn_init == "zeros")
        init = inoc::StrategyProfile::zeros(g.node_count());
      else if (dyn_init == "ones")
        init = inoc::StrategyProfile::ones(g.node_count());
      else
        init = inoc::read_profile_json(dyn_init, g.node_count());
      auto order = dyn_order == "random" ? inoc::UpdateOrder::random
                                         : inoc::UpdateOrder::round_robin;
      auto result =
          inoc::best_response_dynamics(g, cfg, init, order, dyn_opts.seed, dyn_max_rounds);
      emit(inoc::to_json(result), dyn_opts.out);
      if (!result.converged) {
        std::cerr << "did not converge within " << result.rounds << " rounds\n";
        return kExitPrecondition;
      }
    } else if (worst->parsed()) {
      auto g = load_graph(worst_opts);
      auto cfg = inoc::GameConfig::from_decimal(worst_opts.C, worst_opts.L, worst_opts.threshold);
      emit(inoc::to_json(inoc::worst_pure_nash(g, cfg, worst_opts.cap)), worst_opts.out);
    } else if (fstar->parsed()) {
      auto cfg = inoc::GameConfig::from_decimal(fstar_opts.C, fstar_opts.L, 1);
      emit(inoc::to_json(inoc::star_fractional(fstar_n, cfg.C, cfg.L)), fstar_opts.out);
    } else if (funi->parsed()) {
      auto g = load_graph(funi_opts);
      auto cfg = inoc::GameConfig::from_decimal(funi_opts.C, funi_opts.L, 1);
      double p = inoc::uniform_fractional(g, cfg, funi_opts.tol, eval_mode(funi_opts),
                                          funi_opts.samples, funi_opts.seed, funi_opts.cap);
      emit("{\n  \"p\": " + inoc::format_g12(p) + "\n}\n", funi_opts.out);
    } else if (opt->parsed()) {
      auto g = load_graph(opt_opts);
      auto cfg = inoc::GameConfig::from_decimal(opt_opts.C, opt_opts.L, opt_opts.threshold);
      inoc::OptimumResult result;
      if (opt_method == "brute") {
        result = inoc::brute_force_optimum(g, cfg, opt_opts.cap);
      } else {
        std::vector<inoc::NodeId> secure;
        if (opt_method == "tree-sep") {
          secure = inoc::tree_separator_strategy(g);
        } else if (opt_method == "recursive-sep") {
          inoc::SeparatorOracle oracle;
          if (auto shape = load_grid_shape(opt_opts.graph_path))
            oracle = inoc::grid_separator_oracle(shape->first, shape->second);
          else if (g.tags().tree || inoc::is_tree(g))
            oracle = inoc::centroid_separator_oracle();
          else
            throw inoc::PreconditionError("no built-in separator oracle for this graph");
          int target = opt_target;
          if (target == 0) {
            target = 1;
            while (static_cast<long long>(target) * target < g.node_count()) target <<= 1;
          }
          secure = inoc::recursive_separator_strategy(g, oracle, target);
        } else if (opt_method == "subdivision") {
          inoc::GeneratedGraph gg;
          gg.graph = g;
          gg.branch_nodes = load_branch_nodes(opt_opts.graph_path, opt_meta);
          secure = inoc::subdivision_strategy(gg);
        } else {  // greedy
          secure = inoc::greedy_optimum(g, cfg);
        }
        result.secure = secure;
        result.cost = inoc::cost_pure(g, cfg, secure).total;
      }
      emit(inoc::to_json(result, opt_method), opt_opts.out);
    } else if (poa_cmd->parsed()) {
      auto g = load_graph(poa_opts);
      auto cfg = inoc::GameConfig::from_decimal(poa_opts.C, poa_opts.L, poa_opts.threshold);
      inoc::PoaOptions options;
      options.cap = poa_opts.cap;
      options.target_components = poa_target;
      options.ne_method = poa_ne_method == "analytic" ? inoc::NeMethod::analytic
                                                      : inoc::NeMethod::exhaustive;
      if (poa_opt_method == "brute") options.opt_method = inoc::OptMethod::brute;
      if (poa_opt_method == "tree-sep") options.opt_method = inoc::OptMethod::tree_sep;
      if (poa_opt_method == "recursive-sep") {
        options.opt_method = inoc::OptMethod::recursive_sep;
        if (auto shape = load_grid_shape(poa_opts.graph_path))
          options.oracle = inoc::grid_separator_oracle(shape->first, shape->second);
      }
      if (poa_opt_method == "subdivision") {
        options.opt_method = inoc::OptMethod::subdivision;
        options.branch_nodes = load_branch_nodes(poa_opts.graph_path, poa_meta);
      }
      if (poa_opt_method == "greedy") options.opt_method = inoc::OptMethod::greedy;
      emit(inoc::to_json(inoc::price_of_anarchy(g, cfg, options)), poa_opts.out);
    } else if (dis->parsed()) {
      auto g = load_graph(dis_opts);
      emit(inoc::to_json(inoc::dismantling_probe(g, dis_delta, dis_eps, dis_trials,
                                                 dis_opts.seed)),
           dis_opts.out);
    } else if (exp->parsed()) {
      if (exp_scenario == "list") {
        for (const auto& name : inoc::scenario_names()) std::cout << name << "\n";
        return kExitOk;
      }
      auto result = inoc::run_scenario(exp_scenario, exp_opts.seed, exp_reproducible);
      emit(result.csv, exp_opts.out);
      if (!exp_plot.empty()) emit(inoc::scenario_svg(result), exp_plot);
      for (const auto& row : result.rows)
        if (!row.error.empty())
          std::cerr << "row error (" << row.family << " n=" << row.n << "): " << row.error
                    << "\n";
    }
  } catch (const inoc::PreconditionError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}
