#include <bit>

#include <omp.h>

#include "inoc/kernels.hpp"
#include "kernels_detail.hpp"

// OpenMP twins of the serial reference kernels. Work is partitioned across
// threads, accumulated in per-thread integer state and merged; every per-item
// result is deterministic and the merges are order-insensitive (integer sums,
// total-order argmin), so output matches the serial kernels bit for bit.

namespace inoc::kernels {

using detail::MaskScanScratch;
using detail::PairIndexer;
using detail::SpreadScratch;

PairCounts pair_infection_counts_parallel(const Graph& g, const std::vector<std::uint8_t>& secure) {
  const int n = g.node_count();
  PairCounts out;
  out.per_node.assign(n, 0);
  out.pair_count = PairIndexer(n).count();
#pragma omp parallel
  {
    SpreadScratch scratch(n);
    std::vector<std::uint64_t> local(n, 0);
    std::uint64_t local_mass = 0;
    NodeId pair[2];
#pragma omp for schedule(dynamic, 4) nowait
    for (NodeId a = 0; a < n; ++a) {
      for (NodeId b = a + 1; b < n; ++b) {
        pair[0] = a;
        pair[1] = b;
        int count = detail::bootstrap_spread(g, secure, pair, 2, 2, scratch);
        local_mass += count;
        for (std::size_t k = 0; k < scratch.queue.size(); ++k) ++local[scratch.queue[k]];
      }
    }
#pragma omp critical
    {
      out.infected_mass += local_mass;
      for (NodeId v = 0; v < n; ++v) out.per_node[v] += local[v];
    }
  }
  return out;
}

SampleMoments component_size_moments_parallel(const Graph& g, const StrategyProfile& profile,
                                              NodeId i, std::uint64_t samples,
                                              std::uint64_t seed) {
  const auto plan = detail::make_enumeration_plan(profile, i);
  SampleMoments out;
  out.samples = samples;
  std::uint64_t sum = 0, sum_sq = 0;
#pragma omp parallel
  {
    SpreadScratch scratch(g.node_count());
    std::vector<std::uint8_t> flags;
#pragma omp for reduction(+ : sum, sum_sq) schedule(static)
    for (long long k = 0; k < static_cast<long long>(samples); ++k) {
      detail::draw_flags(plan, profile, seed, static_cast<std::uint64_t>(k), flags);
      std::uint64_t size = detail::component_size_of(g, flags, i, scratch);
      sum += size;
      sum_sq += size * size;
    }
  }
  out.sum = sum;
  out.sum_sq = sum_sq;
  return out;
}

CostMoments cost_samples_parallel(const Graph& g, const GameConfig& cfg,
                                  const StrategyProfile& profile, std::uint64_t samples,
                                  std::uint64_t seed) {
  const int n = g.node_count();
  CostMoments out;
  out.secure_count.assign(n, 0);
  out.infected_count.assign(n, 0);
  out.samples = samples;
  std::uint64_t sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
#pragma omp parallel
  {
    SpreadScratch scratch(n);
    std::vector<std::uint8_t> flags(n, 0);
    std::vector<std::uint64_t> local_secure(n, 0), local_infected(n, 0);
#pragma omp for reduction(+ : sx, sy, sxx, syy, sxy) schedule(static) nowait
    for (long long k = 0; k < static_cast<long long>(samples); ++k) {
      int x = 0, y = 0;
      detail::one_cost_sample(g, cfg, profile, seed, static_cast<std::uint64_t>(k), scratch, flags,
                              x, y);
      for (NodeId j = 0; j < n; ++j) local_secure[j] += flags[j];
      for (NodeId v : scratch.queue) ++local_infected[v];
      sx += x;
      sy += y;
      sxx += static_cast<std::uint64_t>(x) * x;
      syy += static_cast<std::uint64_t>(y) * y;
      sxy += static_cast<std::uint64_t>(x) * y;
    }
#pragma omp critical
    {
      for (NodeId v = 0; v < n; ++v) {
        out.secure_count[v] += local_secure[v];
        out.infected_count[v] += local_infected[v];
      }
    }
  }
  out.sum_x = sx;
  out.sum_y = sy;
  out.sum_xx = sxx;
  out.sum_yy = syy;
  out.sum_xy = sxy;
  return out;
}

SampleMoments infection_indicator_moments_parallel(const Graph& g, const GameConfig& cfg,
                                                   const StrategyProfile& profile, NodeId i,
                                                   std::uint64_t samples, std::uint64_t seed) {
  const auto plan = detail::make_enumeration_plan(profile, i);
  SampleMoments out;
  out.samples = samples;
  std::uint64_t sum = 0;
#pragma omp parallel
  {
    SpreadScratch scratch(g.node_count());
    std::vector<std::uint8_t> flags;
#pragma omp for reduction(+ : sum) schedule(static)
    for (long long k = 0; k < static_cast<long long>(samples); ++k) {
      sum += detail::one_indicator_sample(g, cfg, plan, profile, i, seed,
                                          static_cast<std::uint64_t>(k), scratch, flags);
    }
  }
  out.sum = sum;
  out.sum_sq = sum;
  return out;
}

SubsetScanResult min_cost_secure_subset_parallel(const Graph& g, const GameConfig& cfg) {
  const int n = g.node_count();
  const long long limit = 1LL << n;
  SubsetScanResult best;
#pragma omp parallel
  {
    MaskScanScratch scratch(n);
    SubsetScanResult local;
#pragma omp for schedule(static) nowait
    for (long long mask = 0; mask < limit; ++mask) {
      double cost;
      if (cfg.threshold == 1)
        cost = detail_scan::mask_cost_threshold1(g, cfg, static_cast<std::uint32_t>(mask), scratch);
      else
        cost = check_pure_profile(g, cfg, static_cast<std::uint32_t>(mask)).cost;
      SubsetScanResult cand{true, static_cast<std::uint32_t>(mask), cost};
      if (detail_scan::better_min(cand, local, n)) local = cand;
    }
#pragma omp critical
    {
      if (local.found && detail_scan::better_min(local, best, n)) best = local;
    }
  }
  return best;
}

SubsetScanResult worst_nash_profile_parallel(const Graph& g, const GameConfig& cfg) {
  const int n = g.node_count();
  const long long limit = 1LL << n;
  SubsetScanResult best;
  const Rational t = cfg.t_exact(n);
#pragma omp parallel
  {
    MaskScanScratch scratch(n);
    SubsetScanResult local;
#pragma omp for schedule(static) nowait
    for (long long mask_ll = 0; mask_ll < limit; ++mask_ll) {
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
      if (detail_scan::better_max(cand, local, n)) local = cand;
    }
#pragma omp critical
    {
      if (local.found && detail_scan::better_max(local, best, n)) best = local;
    }
  }
  return best;
}

}  // namespace inoc::kernels
