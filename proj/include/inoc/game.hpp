#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inoc/graph.hpp"
#include "inoc/rational.hpp"

namespace inoc {

inline constexpr int kDefaultEnumerationCap = 20;

// Costs are exact rationals so that pure-profile equilibrium checks can use
// integer cross-multiplication; floating views are derived on demand.
struct GameConfig {
  Rational C;        // inoculation cost, > 0
  Rational L;        // infection cost, > 0
  int threshold;     // contagion threshold, 1 or 2

  GameConfig(Rational inoculation_cost, Rational infection_cost, int contagion_threshold = 1);
  static GameConfig from_decimal(const std::string& inoculation_cost,
                                 const std::string& infection_cost,
                                 int contagion_threshold = 1);

  double c() const { return C.value(); }
  double l() const { return L.value(); }
  // Equilibrium threshold t = C n / L.
  double t(int n) const { return t_exact(n).value(); }
  Rational t_exact(int n) const { return C * Rational(n) / L; }
};

struct StrategyProfile {
  std::vector<double> a;  // per-node inoculation probability in [0,1]

  static StrategyProfile zeros(int n) { return {std::vector<double>(n, 0.0)}; }
  static StrategyProfile ones(int n) { return {std::vector<double>(n, 1.0)}; }
  static StrategyProfile uniform(int n, double p) { return {std::vector<double>(n, p)}; }
  static StrategyProfile pure_secure(int n, const std::vector<NodeId>& secure);

  int size() const { return static_cast<int>(a.size()); }
  bool pure() const;
  bool fractional() const;  // every entry strictly inside (0,1)
  void validate(int n) const;
  // Secure flags for a pure profile.
  std::vector<std::uint8_t> secure_flags() const;
};

enum class CostMode { exact_formula, exact_enumeration, monte_carlo };
std::string cost_mode_name(CostMode mode);

struct CostReport {
  double total = 0.0;
  std::vector<double> per_node;
  CostMode mode = CostMode::exact_formula;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double half_width = 0.0;
};

enum class EvalMode { exact, monte_carlo };

// Social cost of a pure strategy. Threshold 1 uses the closed form
// C|I| + (L/n) * sum k_i^2 over attack components; threshold 2 enumerates all
// C(n,2) start pairs exactly.
CostReport cost_pure(const Graph& g, const GameConfig& cfg, const std::vector<NodeId>& secure);

// S(i): expected size of i's attack-graph component with i held insecure,
// by exact enumeration over the undetermined nodes (0 < a_j < 1, j != i).
// Errors when a_i = 1 or more than `cap` nodes are undetermined.
double expected_component_size_exact(const Graph& g, const StrategyProfile& profile, NodeId i,
                                     int cap = kDefaultEnumerationCap);

struct McEstimate {
  double mean = 0.0;
  double half_width = 0.0;  // normal-approximation 95%
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

McEstimate expected_component_size_mc(const Graph& g, const StrategyProfile& profile, NodeId i,
                                      std::uint64_t samples, std::uint64_t seed);

// Infection probability of i conditioned on i staying insecure, under the
// start distribution of the configured threshold.
double infection_probability_of(const Graph& g, const GameConfig& cfg,
                                const StrategyProfile& profile, NodeId i,
                                int cap = kDefaultEnumerationCap);

double individual_cost(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                       NodeId i, EvalMode mode, std::uint64_t samples = 0, std::uint64_t seed = 0,
                       int cap = kDefaultEnumerationCap);

CostReport cost_profile(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                        EvalMode mode, std::uint64_t samples = 0, std::uint64_t seed = 0,
                        int cap = kDefaultEnumerationCap);

}  // namespace inoc
