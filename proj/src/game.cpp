#include "inoc/game.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "inoc/errors.hpp"
#include "inoc/kernels.hpp"
#include "kernels_detail.hpp"

namespace inoc {

namespace {

constexpr double kZ95 = 1.959963984540054;

double half_width_from_moments(double sum, double sum_sq, std::uint64_t samples) {
  if (samples < 2) return 0.0;
  double mean = sum / static_cast<double>(samples);
  double var = (sum_sq - mean * sum) / static_cast<double>(samples - 1);
  if (var < 0) var = 0;  // integer cancellation can land a hair below zero
  return kZ95 * std::sqrt(var / static_cast<double>(samples));
}

void check_mc_range(const Graph& g, std::uint64_t samples) {
  require(samples >= 1, "monte carlo needs samples >= 1");
  const double n = g.node_count();
  require(static_cast<double>(samples) * n * n < 9.0e18,
          "samples * n^2 exceeds the exact integer accumulator range");
}

// Kahan-compensated accumulator; exact enumeration sums thousands of terms.
struct CompensatedSum {
  double total = 0.0;
  double carry = 0.0;
  void add(double x) {
    double y = x - carry;
    double t = total + y;
    carry = (t - total) - y;
    total = t;
  }
};

}  // namespace

GameConfig::GameConfig(Rational inoculation_cost, Rational infection_cost,
                       int contagion_threshold)
    : C(inoculation_cost), L(infection_cost), threshold(contagion_threshold) {
  require(C.positive(), "inoculation cost C must be positive");
  require(L.positive(), "infection cost L must be positive");
  require(threshold == 1 || threshold == 2, "threshold must be 1 or 2");
}

GameConfig GameConfig::from_decimal(const std::string& inoculation_cost,
                                    const std::string& infection_cost, int contagion_threshold) {
  return GameConfig(Rational::from_decimal(inoculation_cost),
                    Rational::from_decimal(infection_cost), contagion_threshold);
}

std::string cost_mode_name(CostMode mode) {
  switch (mode) {
    case CostMode::exact_formula: return "exact_formula";
    case CostMode::exact_enumeration: return "exact_enumeration";
    case CostMode::monte_carlo: return "monte_carlo";
  }
  return "unknown";
}

StrategyProfile StrategyProfile::pure_secure(int n, const std::vector<NodeId>& secure) {
  auto flags = node_flags(n, secure);
  StrategyProfile p;
  p.a.resize(n);
  for (NodeId v = 0; v < n; ++v) p.a[v] = flags[v] ? 1.0 : 0.0;
  return p;
}

bool StrategyProfile::pure() const {
  return std::all_of(a.begin(), a.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

bool StrategyProfile::fractional() const {
  return std::all_of(a.begin(), a.end(), [](double x) { return x > 0.0 && x < 1.0; });
}

void StrategyProfile::validate(int n) const {
  require(size() == n, "profile length must match the node count");
  for (double x : a) require(x >= 0.0 && x <= 1.0, "probabilities must lie in [0,1]");
}

std::vector<std::uint8_t> StrategyProfile::secure_flags() const {
  require(pure(), "secure flags need a pure profile");
  std::vector<std::uint8_t> flags(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) flags[v] = a[v] == 1.0 ? 1 : 0;
  return flags;
}

CostReport cost_pure(const Graph& g, const GameConfig& cfg, const std::vector<NodeId>& secure) {
  const int n = g.node_count();
  auto flags = node_flags(n, secure);
  const int secured = static_cast<int>(secure.size());

  CostReport report;
  report.per_node.assign(n, 0.0);

  if (cfg.threshold == 1) {
    auto labels = attack_components(g, flags);
    long long sum_sq = 0;
    for (int size : labels.sizes) sum_sq += static_cast<long long>(size) * size;
    report.total = cfg.c() * secured + cfg.l() * static_cast<double>(sum_sq) / n;
    for (NodeId v = 0; v < n; ++v)
      report.per_node[v] = flags[v]
                               ? cfg.c()
                               : cfg.l() * static_cast<double>(labels.sizes[labels.comp[v]]) / n;
    report.mode = CostMode::exact_formula;
    return report;
  }

  require(n >= 2, "threshold 2 needs at least two nodes");
  auto counts = kernels::pair_infection_counts_parallel(g, flags);
  const double total_pairs = static_cast<double>(counts.pair_count);
  report.total =
      cfg.c() * secured + cfg.l() * static_cast<double>(counts.infected_mass) / total_pairs;
  for (NodeId v = 0; v < n; ++v)
    report.per_node[v] =
        flags[v] ? cfg.c() : cfg.l() * static_cast<double>(counts.per_node[v]) / total_pairs;
  report.mode = CostMode::exact_enumeration;
  return report;
}

namespace {

// Exact expectation over the 2^u inoculation patterns of the undetermined
// nodes; `body(flags)` returns the integrand for one pattern.
template <typename Body>
double enumerate_patterns(const StrategyProfile& profile, NodeId i, int cap, Body body) {
  auto plan = kernels::detail::make_enumeration_plan(profile, i);
  const int u = static_cast<int>(plan.undetermined.size());
  require(u <= cap, "too many undetermined nodes for exact enumeration");
  std::vector<std::uint8_t> flags = plan.base_flags;
  CompensatedSum acc;
  const std::uint64_t limit = 1ULL << u;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double prob = 1.0;
    for (int k = 0; k < u; ++k) {
      NodeId j = plan.undetermined[k];
      if (mask & (1ULL << k)) {
        flags[j] = 1;
        prob *= profile.a[j];
      } else {
        flags[j] = 0;
        prob *= 1.0 - profile.a[j];
      }
    }
    acc.add(prob * body(flags));
  }
  return acc.total;
}

// S(i) with i forced insecure; no constraint on a_i (the distribution over
// the other nodes does not involve it).
double component_size_conditioned(const Graph& g, const StrategyProfile& profile, NodeId i,
                                  int cap) {
  kernels::detail::SpreadScratch scratch(g.node_count());
  return enumerate_patterns(profile, i, cap, [&](const std::vector<std::uint8_t>& flags) {
    return static_cast<double>(kernels::detail::component_size_of(g, flags, i, scratch));
  });
}

}  // namespace

double expected_component_size_exact(const Graph& g, const StrategyProfile& profile, NodeId i,
                                     int cap) {
  const int n = g.node_count();
  profile.validate(n);
  require(i >= 0 && i < n, "node out of range");
  require(profile.a[i] < 1.0, "S(i) conditions on i staying insecure; a_i must be < 1");
  return component_size_conditioned(g, profile, i, cap);
}

McEstimate expected_component_size_mc(const Graph& g, const StrategyProfile& profile, NodeId i,
                                      std::uint64_t samples, std::uint64_t seed) {
  const int n = g.node_count();
  profile.validate(n);
  require(i >= 0 && i < n, "node out of range");
  require(profile.a[i] < 1.0, "S(i) conditions on i staying insecure; a_i must be < 1");
  check_mc_range(g, samples);

  auto moments = kernels::component_size_moments_parallel(g, profile, i, samples, seed);
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(moments.sum) / static_cast<double>(samples);
  est.half_width = half_width_from_moments(static_cast<double>(moments.sum),
                                           static_cast<double>(moments.sum_sq), samples);
  return est;
}

double infection_probability_of(const Graph& g, const GameConfig& cfg,
                                const StrategyProfile& profile, NodeId i, int cap) {
  const int n = g.node_count();
  profile.validate(n);
  require(i >= 0 && i < n, "node out of range");
  if (cfg.threshold == 1) return component_size_conditioned(g, profile, i, cap) / n;

  require(n >= 2, "threshold 2 needs at least two nodes");
  kernels::detail::SpreadScratch scratch(n);
  const double total_pairs = static_cast<double>(kernels::detail::PairIndexer(n).count());
  return enumerate_patterns(profile, i, cap, [&](const std::vector<std::uint8_t>& flags) {
    std::uint64_t favorable = 0;
    NodeId pair[2];
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = a + 1; b < n; ++b) {
        pair[0] = a;
        pair[1] = b;
        kernels::detail::bootstrap_spread(g, flags, pair, 2, 2, scratch, i);
        if (scratch.infected[i]) ++favorable;
      }
    return static_cast<double>(favorable) / total_pairs;
  });
}

double individual_cost(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                       NodeId i, EvalMode mode, std::uint64_t samples, std::uint64_t seed,
                       int cap) {
  const int n = g.node_count();
  profile.validate(n);
  require(i >= 0 && i < n, "node out of range");
  const double a_i = profile.a[i];
  if (a_i == 1.0) return cfg.c();  // inoculation certain, infection term vanishes

  double p_i;
  if (mode == EvalMode::exact) {
    p_i = infection_probability_of(g, cfg, profile, i, cap);
  } else {
    check_mc_range(g, samples);
    auto moments = kernels::infection_indicator_moments_parallel(g, cfg, profile, i, samples, seed);
    p_i = static_cast<double>(moments.sum) / static_cast<double>(samples);
  }
  return cfg.c() * a_i + cfg.l() * (1.0 - a_i) * p_i;
}

CostReport cost_profile(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                        EvalMode mode, std::uint64_t samples, std::uint64_t seed, int cap) {
  const int n = g.node_count();
  profile.validate(n);

  if (mode == EvalMode::exact) {
    if (profile.pure()) return cost_pure(g, cfg, flagged_nodes(profile.secure_flags()));
    CostReport report;
    report.per_node.resize(n);
    CompensatedSum total;
    for (NodeId v = 0; v < n; ++v) {
      report.per_node[v] = individual_cost(g, cfg, profile, v, EvalMode::exact, 0, 0, cap);
      total.add(report.per_node[v]);
    }
    report.total = total.total;
    report.mode = CostMode::exact_enumeration;
    return report;
  }

  check_mc_range(g, samples);
  auto moments = kernels::cost_samples_parallel(g, cfg, profile, samples, seed);
  const double inv = 1.0 / static_cast<double>(samples);
  CostReport report;
  report.mode = CostMode::monte_carlo;
  report.samples = samples;
  report.seed = seed;
  report.per_node.resize(n);
  for (NodeId v = 0; v < n; ++v)
    report.per_node[v] = inv * (cfg.c() * static_cast<double>(moments.secure_count[v]) +
                                cfg.l() * static_cast<double>(moments.infected_count[v]));
  report.total = inv * (cfg.c() * static_cast<double>(moments.sum_x) +
                        cfg.l() * static_cast<double>(moments.sum_y));

  if (samples >= 2) {
    // var(CX + LY) from the exact integer moments
    const double s = static_cast<double>(samples);
    const double mx = static_cast<double>(moments.sum_x) / s;
    const double my = static_cast<double>(moments.sum_y) / s;
    const double var_x = (static_cast<double>(moments.sum_xx) - mx * moments.sum_x) / (s - 1);
    const double var_y = (static_cast<double>(moments.sum_yy) - my * moments.sum_y) / (s - 1);
    const double cov = (static_cast<double>(moments.sum_xy) - mx * moments.sum_y) / (s - 1);
    double var = cfg.c() * cfg.c() * var_x + cfg.l() * cfg.l() * var_y + 2 * cfg.c() * cfg.l() * cov;
    if (var < 0) var = 0;
    report.half_width = kZ95 * std::sqrt(var / s);
  }
  return report;
}

}  // namespace inoc
