#include "inoc/reports.hpp"

#include <fstream>

#include <json.hpp>

#include "inoc/errors.hpp"

namespace inoc {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const CostReport& report) {
  json j{{"total", report.total},
         {"per_node", report.per_node},
         {"mode", cost_mode_name(report.mode)}};
  if (report.mode == CostMode::monte_carlo) {
    j["samples"] = report.samples;
    j["seed"] = report.seed;
    j["half_width"] = report.half_width;
  }
  return dump(j);
}

std::string to_json(const InfectionOutcome& outcome) {
  return dump(json{{"starts", outcome.starts},
                   {"infected", outcome.infected},
                   {"secure", outcome.secure},
                   {"infected_count", outcome.infected.size()}});
}

std::string to_json(const EquilibriumReport& report) {
  json nodes = json::array();
  for (const auto& cond : report.per_node) {
    json c{{"action", action_class_name(cond.action)},
           {"value", cond.value},
           {"violation", cond.violation},
           {"ok", cond.ok()},
           {"verdict", verdict_name(cond.verdict)}};
    if (report.mode == EvalMode::monte_carlo) c["half_width"] = cond.half_width;
    nodes.push_back(c);
  }
  json j{{"is_nash", report.is_nash},
         {"verdict", verdict_name(report.verdict)},
         {"worst_violation", report.worst_violation},
         {"tol", report.tol},
         {"mode", report.mode == EvalMode::exact ? "exact" : "monte_carlo"},
         {"per_node", nodes}};
  if (report.mode == EvalMode::monte_carlo) {
    j["samples"] = report.samples;
    j["seed"] = report.seed;
  }
  return dump(j);
}

std::string to_json(const DynamicsResult& result) {
  return dump(json{{"profile", result.profile.a},
                   {"rounds", result.rounds},
                   {"converged", result.converged}});
}

std::string to_json(const WorstNashResult& result) {
  return dump(json{{"profile", result.profile.a}, {"cost", result.cost}});
}

std::string to_json(const StarFractional& result) {
  return dump(json{{"leaf_p", result.leaf_p}, {"root_q", result.root_q}});
}

std::string to_json(const OptimumResult& result, const std::string& method) {
  return dump(json{{"secure", result.secure},
                   {"secure_count", result.secure.size()},
                   {"cost", result.cost},
                   {"method", method}});
}

std::string to_json(const PoaReport& report) {
  json j{{"worst_ne_cost", report.worst_ne_cost},
         {"ne_provenance", report.ne_provenance},
         {"optimum_cost", report.optimum_cost},
         {"opt_provenance", report.opt_provenance}};
  // an exact ratio may be called poa; a heuristic denominator only bounds it
  if (report.poa_is_lower_bound)
    j["poa_lower_bound"] = report.poa;
  else
    j["poa"] = report.poa;
  if (report.analytic_lower_bound_on_opt) {
    j["analytic_lower_bound_on_opt"] = *report.analytic_lower_bound_on_opt;
    j["poa_upper_bound"] = *report.poa_upper_bound;
  }
  return dump(j);
}

std::string to_json(const DismantlingReport& report) {
  json probes = json::array();
  for (const auto& rec : report.probes)
    probes.push_back(json{{"label", rec.label},
                          {"largest_component", rec.largest_component},
                          {"holds", rec.holds}});
  return dump(json{{"holds", report.holds},
                   {"min_largest_component", report.min_largest_component},
                   {"removal_size", report.removal_size},
                   {"evidence", "statistical"},
                   {"probes", probes}});
}

std::string sidecar_json(const GeneratedGraph& gg) {
  json j;
  j["branch_nodes"] = gg.branch_nodes;
  json tags = json::array();
  if (gg.graph.tags().vertex_transitive) tags.push_back("vertex_transitive");
  if (gg.graph.tags().tree) tags.push_back("tree");
  if (gg.graph.tags().planar_hint) tags.push_back("planar_hint");
  j["tags"] = tags;
  j["family"] = family_name(gg.family);
  if (gg.family == Family::grid) j["grid"] = json{{"rows", gg.rows}, {"cols", gg.cols}};
  if (gg.family == Family::subdivided_regular) j["base_nodes"] = gg.base_nodes;
  return dump(j);
}

StrategyProfile read_profile_json(const std::string& path, int n) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open profile file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& err) {
    throw PreconditionError(std::string("profile file is not valid JSON: ") + err.what());
  }
  require(j.is_array(), "profile file must hold a JSON array");
  StrategyProfile profile;
  for (const auto& entry : j) {
    require(entry.is_number(), "profile entries must be numbers");
    profile.a.push_back(entry.get<double>());
  }
  profile.validate(n);
  return profile;
}

void write_profile_json(const StrategyProfile& profile, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write profile file: " + path);
  out << json(profile.a).dump() << "\n";
}

}  // namespace inoc
