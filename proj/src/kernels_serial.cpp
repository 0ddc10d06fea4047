#include <bit>

#include "inoc/kernels.hpp"
#include "kernels_detail.hpp"

namespace inoc::kernels {

using detail::MaskScanScratch;
using detail::PairIndexer;
using detail::SpreadScratch;

PairCounts pair_infection_counts_serial(const Graph& g, const std::vector<std::uint8_t>& secure) {
  const int n = g.node_count();
  PairCounts out;
  out.per_node.assign(n, 0);
  out.pair_count = PairIndexer(n).count();
  SpreadScratch scratch(n);
  NodeId pair[2];
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      pair[0] = a;
      pair[1] = b;
      int count = detail::bootstrap_spread(g, secure, pair, 2, 2, scratch);
      out.infected_mass += count;
      for (std::size_t k = 0; k < scratch.queue.size(); ++k) ++out.per_node[scratch.queue[k]];
    }
  return out;
}

std::uint64_t pair_infection_count_of(const Graph& g, std::vector<std::uint8_t> secure, NodeId i) {
  const int n = g.node_count();
  secure[i] = 0;
  SpreadScratch scratch(n);
  std::uint64_t favorable = 0;
  NodeId pair[2];
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      pair[0] = a;
      pair[1] = b;
      detail::bootstrap_spread(g, secure, pair, 2, 2, scratch, i);
      if (scratch.infected[i]) ++favorable;
    }
  return favorable;
}

SampleMoments component_size_moments_serial(const Graph& g, const StrategyProfile& profile,
                                            NodeId i, std::uint64_t samples, std::uint64_t seed) {
  const auto plan = detail::make_enumeration_plan(profile, i);
  SampleMoments out;
  out.samples = samples;
  SpreadScratch scratch(g.node_count());
  std::vector<std::uint8_t> flags;
  for (std::uint64_t k = 0; k < samples; ++k) {
    detail::draw_flags(plan, profile, seed, k, flags);
    std::uint64_t size = detail::component_size_of(g, flags, i, scratch);
    out.sum += size;
    out.sum_sq += size * size;
  }
  return out;
}

CostMoments cost_samples_serial(const Graph& g, const GameConfig& cfg,
                                const StrategyProfile& profile, std::uint64_t samples,
                                std::uint64_t seed) {
  const int n = g.node_count();
  CostMoments out;
  out.secure_count.assign(n, 0);
  out.infected_count.assign(n, 0);
  out.samples = samples;
  SpreadScratch scratch(n);
  std::vector<std::uint8_t> flags(n, 0);
  for (std::uint64_t k = 0; k < samples; ++k) {
    int x = 0, y = 0;
    detail::one_cost_sample(g, cfg, profile, seed, k, scratch, flags, x, y);
    for (NodeId j = 0; j < n; ++j) out.secure_count[j] += flags[j];
    for (NodeId v : scratch.queue) ++out.infected_count[v];
    out.sum_x += x;
    out.sum_y += y;
    out.sum_xx += static_cast<std::uint64_t>(x) * x;
    out.sum_yy += static_cast<std::uint64_t>(y) * y;
    out.sum_xy += static_cast<std::uint64_t>(x) * y;
  }
  return out;
}

SampleMoments infection_indicator_moments_serial(const Graph& g, const GameConfig& cfg,
                                                 const StrategyProfile& profile, NodeId i,
                                                 std::uint64_t samples, std::uint64_t seed) {
  const auto plan = detail::make_enumeration_plan(profile, i);
  SampleMoments out;
  out.samples = samples;
  SpreadScratch scratch(g.node_count());
  std::vector<std::uint8_t> flags;
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::uint64_t ind =
        detail::one_indicator_sample(g, cfg, plan, profile, i, seed, k, scratch, flags);
    out.sum += ind;
    out.sum_sq += ind;
  }
  return out;
}

// --- exhaustive scans --------------------------------------------------------

PureProfileCheck check_pure_profile(const Graph& g, const GameConfig& cfg, std::uint32_t mask) {
  const int n = g.node_count();
  PureProfileCheck out;
  const Rational t = cfg.t_exact(n);
  if (cfg.threshold == 1) {
    MaskScanScratch scratch(n);
    auto comps = detail::mask_components(g, mask, scratch);
    out.cost = cfg.c() * std::popcount(mask) + cfg.l() * static_cast<double>(comps.sum_sq) / n;
    out.is_nash = true;
    for (NodeId v = 0; v < n && out.is_nash; ++v) {
      Rational s(detail::mask_profile_s(g, mask, scratch, v));
      out.is_nash = (mask >> v) & 1u ? s >= t : s <= t;
    }
    return out;
  }

  // threshold 2: exact start-pair counts, compared as L*count <=> C*pairs
  auto flags = detail::mask_flags(mask, n);
  PairCounts counts = pair_infection_counts_serial(g, flags);
  const Rational total(static_cast<long long>(counts.pair_count));
  out.cost = cfg.c() * std::popcount(mask) +
             cfg.l() * static_cast<double>(counts.infected_mass) /
                 static_cast<double>(counts.pair_count);
  out.is_nash = true;
  for (NodeId v = 0; v < n && out.is_nash; ++v) {
    if ((mask >> v) & 1u) {
      Rational mass(static_cast<long long>(pair_infection_count_of(g, flags, v)));
      out.is_nash = cfg.C * total <= cfg.L * mass;
    } else {
      Rational mass(static_cast<long long>(counts.per_node[v]));
      out.is_nash = cfg.L * mass <= cfg.C * total;
    }
  }
  return out;
}

SubsetScanResult min_cost_secure_subset_serial(const Graph& g, const GameConfig& cfg) {
  const int n = g.node_count();
  const std::uint64_t limit = 1ULL << n;
  SubsetScanResult best;
  MaskScanScratch scratch(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double cost;
    if (cfg.threshold == 1)
      cost = detail_scan::mask_cost_threshold1(g, cfg, static_cast<std::uint32_t>(mask), scratch);
    else
      cost = check_pure_profile(g, cfg, static_cast<std::uint32_t>(mask)).cost;
    SubsetScanResult cand{true, static_cast<std::uint32_t>(mask), cost};
    if (detail_scan::better_min(cand, best, n)) best = cand;
  }
  return best;
}

SubsetScanResult worst_nash_profile_serial(const Graph& g, const GameConfig& cfg) {
  const int n = g.node_count();
  const std::uint64_t limit = 1ULL << n;
  SubsetScanResult best;
  MaskScanScratch scratch(n);
  const Rational t = cfg.t_exact(n);
  for (std::uint64_t mask_ll = 0; mask_ll < limit; ++mask_ll) {
    const std::uint32_t mask = static_cast<std::uint32_t>(mask_ll);
    bool nash;
    double cost;
    if (cfg.threshold == 1) {
      auto comps = detail::mask_components(g, mask, scratch);
      nash = true;
      for (NodeId v = 0; v < n && nash; ++v) {
        Rational s(detail::mask_profile_s(g, mask, scratch, v));
        nash = (mask >> v) & 1u ? s >= t : s <= t;
      }
      cost = cfg.c() * std::popcount(mask) + cfg.l() * static_cast<double>(comps.sum_sq) / n;
    } else {
      auto check = check_pure_profile(g, cfg, mask);
      nash = check.is_nash;
      cost = check.cost;
    }
    if (!nash) continue;
    SubsetScanResult cand{true, mask, cost};
    if (detail_scan::better_max(cand, best, n)) best = cand;
  }
  return best;
}

}  // namespace inoc::kernels
