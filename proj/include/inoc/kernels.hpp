#pragma once

#include <cstdint>
#include <vector>

#include "inoc/game.hpp"
#include "inoc/graph.hpp"

namespace inoc::kernels {

// Hot inner loops exist twice: a plain serial reference and an OpenMP
// version. Both produce bit-identical results (integer accumulators,
// per-sample counter RNG streams, total-order reductions); the parity is
// asserted in the test suite and timed by tools/bench_kernels.

// --- threshold-2 start-pair enumeration ------------------------------------

struct PairCounts {
  std::vector<std::uint64_t> per_node;  // pairs that infect the node (0 for secure)
  std::uint64_t infected_mass = 0;      // sum over pairs of |infected|
  std::uint64_t pair_count = 0;         // C(n,2)
};

PairCounts pair_infection_counts_serial(const Graph& g, const std::vector<std::uint8_t>& secure);
PairCounts pair_infection_counts_parallel(const Graph& g, const std::vector<std::uint8_t>& secure);

// Pairs that infect node i when the removal flags are `secure` except that i
// is forced insecure. Early-exits each spread once i ignites.
std::uint64_t pair_infection_count_of(const Graph& g, std::vector<std::uint8_t> secure, NodeId i);

// --- Monte Carlo sampling ----------------------------------------------------

struct SampleMoments {
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  std::uint64_t samples = 0;
};

// |component of i| over seeded draws of the inoculation set (i held insecure).
SampleMoments component_size_moments_serial(const Graph& g, const StrategyProfile& profile,
                                            NodeId i, std::uint64_t samples, std::uint64_t seed);
SampleMoments component_size_moments_parallel(const Graph& g, const StrategyProfile& profile,
                                              NodeId i, std::uint64_t samples, std::uint64_t seed);

// Joint samples of (inoculation set, start nodes): per-node secure/infected
// counts plus integer moments of X=|secure| and Y=|infected| for the variance
// of the total cost C*X + L*Y.
struct CostMoments {
  std::vector<std::uint64_t> secure_count;
  std::vector<std::uint64_t> infected_count;
  std::uint64_t sum_x = 0, sum_y = 0;
  std::uint64_t sum_xx = 0, sum_yy = 0, sum_xy = 0;
  std::uint64_t samples = 0;
};

CostMoments cost_samples_serial(const Graph& g, const GameConfig& cfg,
                                const StrategyProfile& profile, std::uint64_t samples,
                                std::uint64_t seed);
CostMoments cost_samples_parallel(const Graph& g, const GameConfig& cfg,
                                  const StrategyProfile& profile, std::uint64_t samples,
                                  std::uint64_t seed);

// Bernoulli indicator of "i infected" over joint draws, i held insecure.
SampleMoments infection_indicator_moments_serial(const Graph& g, const GameConfig& cfg,
                                                 const StrategyProfile& profile, NodeId i,
                                                 std::uint64_t samples, std::uint64_t seed);
SampleMoments infection_indicator_moments_parallel(const Graph& g, const GameConfig& cfg,
                                                   const StrategyProfile& profile, NodeId i,
                                                   std::uint64_t samples, std::uint64_t seed);

// --- exhaustive subset scans (n <= 25 enforced by callers) -------------------

struct SubsetScanResult {
  bool found = false;
  std::uint32_t mask = 0;  // bit v set = node v secure
  double cost = 0.0;
};

// Minimum-cost secure subset; ties prefer fewer nodes, then the set whose
// sorted node list is lexicographically smallest.
SubsetScanResult min_cost_secure_subset_serial(const Graph& g, const GameConfig& cfg);
SubsetScanResult min_cost_secure_subset_parallel(const Graph& g, const GameConfig& cfg);

// Maximum-cost pure Nash profile; ties prefer the lexicographically smallest
// action vector (a_0, a_1, ...). Equilibrium membership uses exact rational
// comparisons.
SubsetScanResult worst_nash_profile_serial(const Graph& g, const GameConfig& cfg);
SubsetScanResult worst_nash_profile_parallel(const Graph& g, const GameConfig& cfg);

// Exact equilibrium test and social cost for one pure profile.
struct PureProfileCheck {
  bool is_nash = false;
  double cost = 0.0;
};
PureProfileCheck check_pure_profile(const Graph& g, const GameConfig& cfg, std::uint32_t mask);

}  // namespace inoc::kernels
