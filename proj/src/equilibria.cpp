#include "inoc/equilibria.hpp"

#include <algorithm>
#include <cmath>

#include "inoc/errors.hpp"
#include "inoc/kernels.hpp"
#include "inoc/rng.hpp"
#include "kernels_detail.hpp"

namespace inoc {

std::string action_class_name(ActionClass c) {
  switch (c) {
    case ActionClass::zero: return "zero";
    case ActionClass::one: return "one";
    case ActionClass::interior: return "interior";
  }
  return "unknown";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

constexpr double kZ95 = 1.959963984540054;

ActionClass classify(double a) {
  if (a == 0.0) return ActionClass::zero;
  if (a == 1.0) return ActionClass::one;
  return ActionClass::interior;
}

// Signed excess of the condition for one node: positive = violated by that
// much. `value` is S(i) (threshold 1) or L*p_i - C (threshold 2, where the
// cutoff becomes 0 and t drops out).
double condition_excess(ActionClass action, double value, double cutoff) {
  switch (action) {
    case ActionClass::zero: return value - cutoff;
    case ActionClass::one: return cutoff - value;
    case ActionClass::interior: return std::abs(value - cutoff);
  }
  return 0.0;
}

}  // namespace

EquilibriumReport is_nash(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                          double tol, EvalMode mode, std::uint64_t samples, std::uint64_t seed,
                          int cap) {
  const int n = g.node_count();
  profile.validate(n);
  require(tol >= 0.0, "tolerance must be nonnegative");

  EquilibriumReport report;
  report.tol = tol;
  report.mode = mode;
  report.samples = mode == EvalMode::monte_carlo ? samples : 0;
  report.seed = mode == EvalMode::monte_carlo ? seed : 0;
  report.per_node.resize(n);

  const double t = cfg.t(n);
  const double cutoff = cfg.threshold == 1 ? t : 0.0;

  // Pure profiles at threshold 2: one pair enumeration covers every insecure
  // node; secure nodes get their own early-exit pass.
  kernels::PairCounts pure_counts;
  std::vector<std::uint8_t> pure_flags;
  const bool pure_pairs =
      cfg.threshold == 2 && mode == EvalMode::exact && profile.pure() && n >= 2;
  if (pure_pairs) {
    pure_flags = profile.secure_flags();
    pure_counts = kernels::pair_infection_counts_parallel(g, pure_flags);
  }

  for (NodeId v = 0; v < n; ++v) {
    NodeCondition& cond = report.per_node[v];
    cond.action = classify(profile.a[v]);
    // an independent stream per node; a plain seed+v offset would alias
    // streams across nearby seeds
    const std::uint64_t node_seed =
        CounterRng::for_sample(seed, static_cast<std::uint64_t>(v)).next_u64();

    double value, hw = 0.0;
    if (cfg.threshold == 1) {
      if (mode == EvalMode::exact) {
        StrategyProfile conditioned = profile;
        conditioned.a[v] = 0.0;  // S(i) is independent of a_i
        value = expected_component_size_exact(g, conditioned, v, cap);
      } else {
        StrategyProfile conditioned = profile;
        conditioned.a[v] = 0.0;
        auto est = expected_component_size_mc(g, conditioned, v, samples, node_seed);
        value = est.mean;
        hw = est.half_width;
      }
    } else {
      if (pure_pairs) {
        std::uint64_t favorable = pure_flags[v]
                                      ? kernels::pair_infection_count_of(g, pure_flags, v)
                                      : pure_counts.per_node[v];
        double p = static_cast<double>(favorable) / static_cast<double>(pure_counts.pair_count);
        value = cfg.l() * p - cfg.c();
      } else if (mode == EvalMode::exact) {
        double p = infection_probability_of(g, cfg, profile, v, cap);
        value = cfg.l() * p - cfg.c();
      } else {
        auto moments = kernels::infection_indicator_moments_parallel(
            g, cfg, profile, v, samples, node_seed);
        double p = static_cast<double>(moments.sum) / static_cast<double>(samples);
        double var = p * (1.0 - p) * static_cast<double>(samples) /
                     std::max<double>(1.0, static_cast<double>(samples - 1));
        double p_hw = kZ95 * std::sqrt(var / static_cast<double>(samples));
        value = cfg.l() * p - cfg.c();
        hw = cfg.l() * p_hw;
      }
    }

    cond.value = value;
    cond.half_width = hw;
    const double excess = condition_excess(cond.action, value, cutoff);
    cond.violation = std::max(0.0, excess);
    if (mode == EvalMode::exact) {
      cond.verdict = excess <= tol ? Verdict::yes : Verdict::no;
    } else {
      // certified only when the whole confidence interval lands on one side
      if (excess + hw <= tol)
        cond.verdict = Verdict::yes;
      else if (excess - hw > tol)
        cond.verdict = Verdict::no;
      else
        cond.verdict = Verdict::inconclusive;
    }
    report.worst_violation = std::max(report.worst_violation, cond.violation);
  }

  bool any_no = false, any_inconclusive = false;
  for (const auto& cond : report.per_node) {
    any_no |= cond.verdict == Verdict::no;
    any_inconclusive |= cond.verdict == Verdict::inconclusive;
  }
  report.verdict = any_no ? Verdict::no
                          : (any_inconclusive ? Verdict::inconclusive : Verdict::yes);
  report.is_nash = report.verdict == Verdict::yes;
  return report;
}

DynamicsResult best_response_dynamics(const Graph& g, const GameConfig& cfg,
                                      const StrategyProfile& init, UpdateOrder order,
                                      std::uint64_t seed, int max_rounds) {
  const int n = g.node_count();
  init.validate(n);
  require(cfg.threshold == 1, "best-response dynamics supports threshold 1");
  require(init.pure(), "best-response dynamics needs a pure initial profile");
  if (max_rounds < 0) max_rounds = n * n;

  const Rational t = cfg.t_exact(n);
  auto secure = init.secure_flags();

  std::vector<int> seen_comp(n, 0);
  int stamp = 0;
  std::vector<NodeId> visit(n);
  for (NodeId v = 0; v < n; ++v) visit[v] = v;

  DynamicsResult result;
  for (int round = 1; round <= max_rounds; ++round) {
    if (order == UpdateOrder::random) {
      CounterRng rng = CounterRng::for_sample(seed, round);
      for (int k = n - 1; k > 0; --k)
        std::swap(visit[k], visit[rng.next_below(k + 1)]);
    }
    bool changed = false;
    ComponentLabels labels = attack_components(g, secure);
    for (NodeId v : visit) {
      Rational s(kernels::detail::pure_profile_s(g, labels, secure, v, seen_comp, stamp));
      std::uint8_t want = secure[v];
      if (s > t)
        want = 1;
      else if (s < t)
        want = 0;
      if (want != secure[v]) {
        secure[v] = want;
        changed = true;
        labels = attack_components(g, secure);
      }
    }
    result.rounds = round;
    if (!changed) {
      result.converged = true;
      break;
    }
  }
  result.profile.a.resize(n);
  for (NodeId v = 0; v < n; ++v) result.profile.a[v] = secure[v] ? 1.0 : 0.0;
  return result;
}

WorstNashResult worst_pure_nash(const Graph& g, const GameConfig& cfg, int cap) {
  const int n = g.node_count();
  require(n <= cap, "node count exceeds the exhaustive cap");
  require(n <= 25, "exhaustive scan supports at most 25 nodes");

  auto best = kernels::worst_nash_profile_parallel(g, cfg);
  if (!best.found) {
    if (cfg.threshold == 1)
      throw std::logic_error("no pure Nash profile found at threshold 1");  // cannot happen
    throw PreconditionError("no pure Nash profile exists for this instance");
  }
  WorstNashResult out;
  out.cost = best.cost;
  out.profile.a.resize(n);
  for (NodeId v = 0; v < n; ++v) out.profile.a[v] = (best.mask >> v) & 1u ? 1.0 : 0.0;
  return out;
}

StrategyProfile StarFractional::profile(int n) const {
  StrategyProfile p = StrategyProfile::uniform(n, leaf_p);
  p.a[0] = root_q;
  return p;
}

StarFractional star_fractional(int n, const Rational& C, const Rational& L) {
  require(n >= 2, "star needs n >= 2");
  require(C.positive() && L.positive(), "costs must be positive");
  const Rational t = C * Rational(n) / L;
  require(Rational(1) < t && t < Rational(n),
          "interior star equilibrium needs L/n < C < L");

  const Rational q = (Rational(n) - t) / (Rational(1) + t * Rational(n - 2));
  const Rational p = Rational(n - 1) * q / (Rational(n - 2) * q + Rational(1));
  StarFractional out;
  out.root_q = q.value();
  out.leaf_p = p.value();
  return out;
}

double uniform_fractional(const Graph& g, const GameConfig& cfg, double tol, EvalMode mode,
                          std::uint64_t samples, std::uint64_t seed, int cap) {
  const int n = g.node_count();
  require(g.tags().vertex_transitive, "uniform equilibrium needs a vertex-transitive graph");
  require(cfg.threshold == 1, "uniform equilibrium solver supports threshold 1");
  const Rational t_exact = cfg.t_exact(n);
  require(Rational(1) < t_exact && t_exact < Rational(n),
          "interior equilibrium needs L/n < C < L");
  require(tol > 0.0, "tolerance must be positive");

  const double t = cfg.t(n);
  auto s_at = [&](double p) {
    StrategyProfile profile = StrategyProfile::uniform(n, p);
    profile.a[0] = 0.0;  // S(0) conditions node 0 insecure; also covers p = 1
    if (mode == EvalMode::exact) return expected_component_size_exact(g, profile, 0, cap);
    return expected_component_size_mc(g, profile, 0, samples, seed).mean;
  };

  double lo = 0.0, hi = 1.0;
  double f_lo = s_at(lo) - t;  // = n - t > 0
  double f_hi = s_at(hi) - t;  // = 1 - t < 0
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    // dense scan for a sign-change bracket
    bool found = false;
    double prev_p = 0.0, prev_f = f_lo;
    for (int k = 1; k <= 64; ++k) {
      double p = static_cast<double>(k) / 64.0;
      double f = s_at(p) - t;
      if (prev_f > 0.0 && f < 0.0) {
        lo = prev_p;
        hi = p;
        f_lo = prev_f;
        found = true;
        break;
      }
      prev_p = p;
      prev_f = f;
    }
    require(found, "no bracket found for S(p) = t; S(0)-t=" + std::to_string(f_lo) +
                       " S(1)-t=" + std::to_string(f_hi));
  }

  for (int iter = 0; iter < 200; ++iter) {
    double mid = 0.5 * (lo + hi);
    double f_mid = s_at(mid) - t;
    if (std::abs(f_mid) <= tol) return mid;
    if (f_mid > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  throw PreconditionError("bisection failed to reach the requested tolerance");
}

}  // namespace inoc
