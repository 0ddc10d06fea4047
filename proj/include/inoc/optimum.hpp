#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"

namespace inoc {

struct OptimumResult {
  std::vector<NodeId> secure;
  double cost = 0.0;
};

// Minimum-cost pure secure set over all 2^n subsets. Ties prefer smaller
// sets, then the lexicographically smallest sorted node list.
OptimumResult brute_force_optimum(const Graph& g, const GameConfig& cfg,
                                  int cap = kDefaultEnumerationCap);

// Repeatedly removes the centroid of any residual component larger than
// sqrt(n) (smallest-min-node component first) until all components have at
// most sqrt(n) nodes; at most 2*sqrt(n) - 2 removals.
std::vector<NodeId> tree_separator_strategy(const Graph& g);

// Given the whole graph and one part (a connected node set), returns a
// separator subset of the part whose removal splits it into pieces of at most
// half the part's size.
using SeparatorOracle =
    std::function<std::vector<NodeId>(const Graph& g, const std::vector<NodeId>& part)>;

SeparatorOracle centroid_separator_oracle();
SeparatorOracle grid_separator_oracle(int rows, int cols);

// log2(target_components) rounds of oracle-driven splitting; every returned
// separator is validated (parts at most half) before being accepted.
std::vector<NodeId> recursive_separator_strategy(const Graph& g, const SeparatorOracle& oracle,
                                                 int target_components);

// The branch nodes of a subdivided regular construction.
std::vector<NodeId> subdivision_strategy(const GeneratedGraph& gg);

// Analytic lower bound on the optimum for connected graphs of maximum degree
// `degree`: min{C,L} * (2*sqrt(n*degree + 1) - 2) / degree, the minimum of the
// convexity bound below over real gamma.
double delta_opt_lower_bound(int n, int degree, double C, double L);
// Inoculation count gamma that minimizes the convexity bound: n/sqrt(1+degree*n).
double convexity_optimal_gamma(int n, int degree);
// gamma + (n-gamma)^2 / (n*components): cost in units of min{C,L}.
double convexity_cost_bound(int n, double gamma, double components);

// Greedy upper bound: repeatedly secure the node with the largest exact cost
// decrease until no node helps (threshold 1).
std::vector<NodeId> greedy_optimum(const Graph& g, const GameConfig& cfg);

struct DismantlingProbeRecord {
  std::string label;
  int largest_component = 0;
  bool holds = false;  // largest component still >= eps*n
};

struct DismantlingReport {
  bool holds = false;  // every probed set left a component >= eps*n
  int min_largest_component = 0;
  int removal_size = 0;
  std::vector<DismantlingProbeRecord> probes;
  // Sampled evidence only; a `holds` verdict is not a certificate.
};

// Probes `trials` seeded random removal sets of size floor(delta*n) plus
// adversarial heuristics (top-degree, greedy component splitting).
DismantlingReport dismantling_probe(const Graph& g, double delta, double eps, int trials,
                                    std::uint64_t seed);

enum class OptMethod { brute, tree_sep, recursive_sep, subdivision, greedy };
enum class NeMethod { exhaustive, analytic };
std::string opt_method_name(OptMethod m);
std::string ne_method_name(NeMethod m);

struct PoaReport {
  double worst_ne_cost = 0.0;
  std::string ne_provenance;       // exhaustive | analytic_bound
  double optimum_cost = 0.0;
  std::string opt_provenance;      // exhaustive | heuristic_upper_bound
  double poa = 0.0;                // worst_ne_cost / optimum_cost
  bool poa_is_lower_bound = false; // true when the optimum is only an upper bound
  // Threshold-1 extras: the degree-based analytic lower bound on the optimum
  // and the certified PoA upper bound min{C,L}*n / that bound.
  std::optional<double> analytic_lower_bound_on_opt;
  std::optional<double> poa_upper_bound;
};

struct PoaOptions {
  OptMethod opt_method = OptMethod::brute;
  NeMethod ne_method = NeMethod::exhaustive;
  int cap = kDefaultEnumerationCap;
  std::vector<NodeId> branch_nodes;          // subdivision method
  SeparatorOracle oracle;                    // recursive_sep method
  int target_components = 0;                 // recursive_sep; 0 = auto
};

// Worst-equilibrium cost over optimum cost. The analytic equilibrium side
// certifies the all-zero profile exactly and uses its cost; it errors when
// that profile is not an equilibrium.
PoaReport price_of_anarchy(const Graph& g, const GameConfig& cfg, const PoaOptions& options);

}  // namespace inoc
