#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inoc/game.hpp"
#include "inoc/graph.hpp"

namespace inoc {

enum class ActionClass { zero, one, interior };
std::string action_class_name(ActionClass c);

enum class Verdict { yes, no, inconclusive };
std::string verdict_name(Verdict v);

struct NodeCondition {
  ActionClass action = ActionClass::zero;
  // Threshold 1: S(i). Threshold 2: deviation gap L*p_i - C (insecure nodes
  // want it <= 0, secure nodes >= 0, interior = 0).
  double value = 0.0;
  double half_width = 0.0;  // monte carlo mode only
  double violation = 0.0;
  Verdict verdict = Verdict::yes;
  bool ok() const { return verdict == Verdict::yes; }
};

struct EquilibriumReport {
  bool is_nash = false;  // every node certified ok
  Verdict verdict = Verdict::no;
  std::vector<NodeCondition> per_node;
  double worst_violation = 0.0;
  double tol = 0.0;
  EvalMode mode = EvalMode::exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Equilibrium conditions per node. Threshold 1 checks S(i) against t = Cn/L
// with |S - t| <= tol allowed on interior actions; threshold 2 compares the
// deviation costs C and L*p_i directly. Monte Carlo certification is
// three-valued: a confidence interval straddling the cutoff is inconclusive.
EquilibriumReport is_nash(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                          double tol = 1e-9, EvalMode mode = EvalMode::exact,
                          std::uint64_t samples = 0, std::uint64_t seed = 0,
                          int cap = kDefaultEnumerationCap);

enum class UpdateOrder { round_robin, random };

struct DynamicsResult {
  StrategyProfile profile;
  int rounds = 0;  // full passes performed
  bool converged = false;
};

// Asynchronous best responses on pure profiles (threshold 1): a_i flips to 1
// when S(i) > t, to 0 when S(i) < t, and stays put on equality; stops after a
// full pass without changes. Comparisons are exact rationals.
DynamicsResult best_response_dynamics(const Graph& g, const GameConfig& cfg,
                                      const StrategyProfile& init,
                                      UpdateOrder order = UpdateOrder::round_robin,
                                      std::uint64_t seed = 0, int max_rounds = -1);

struct WorstNashResult {
  StrategyProfile profile;
  double cost = 0.0;
};

// Exhaustive scan of all 2^n pure profiles with exact rational equilibrium
// membership; returns the costliest Nash profile (ties: lexicographically
// smallest action vector).
WorstNashResult worst_pure_nash(const Graph& g, const GameConfig& cfg,
                                int cap = kDefaultEnumerationCap);

struct StarFractional {
  double leaf_p = 0.0;
  double root_q = 0.0;
  StrategyProfile profile(int n) const;
};

// Interior equilibrium of the star (root at node 0), valid for L/n < C < L:
// q = (n - t) / (1 + t(n-2)), p = (n-1)q / ((n-2)q + 1) with t = Cn/L.
StarFractional star_fractional(int n, const Rational& C, const Rational& L);

// Uniform inoculation probability p with S(0) = t on a vertex-transitive
// graph, found by bisection on the sign of S(0) - t (with a dense-scan
// fallback for the initial bracket). Requires L/n < C < L.
double uniform_fractional(const Graph& g, const GameConfig& cfg, double tol = 1e-9,
                          EvalMode mode = EvalMode::exact, std::uint64_t samples = 0,
                          std::uint64_t seed = 0, int cap = kDefaultEnumerationCap);

}  // namespace inoc
