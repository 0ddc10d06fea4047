// Times the OpenMP kernels against their serial references and verifies that
// both produce identical results.

#include <cstdio>
#include <string>

#include <omp.h>

#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/kernels.hpp"

using namespace inoc;

namespace {

int failures = 0;

template <typename F>
double time_ms(F&& f) {
  double t0 = omp_get_wtime();
  f();
  return (omp_get_wtime() - t0) * 1000.0;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   omp %9.2f ms   speedup %5.2fx   identical: %s\n",
              name.c_str(), serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "yes" : "NO");
  if (!identical) ++failures;
}

}  // namespace

int main() {
  std::printf("threads: %d\n\n", omp_get_max_threads());

  {
    auto g = generate({.family = Family::bistar, .n = 400}).graph;
    std::vector<std::uint8_t> secure(g.node_count(), 0);
    kernels::PairCounts a, b;
    double ts = time_ms([&] { a = kernels::pair_infection_counts_serial(g, secure); });
    double tp = time_ms([&] { b = kernels::pair_infection_counts_parallel(g, secure); });
    report("pair_infection_counts", ts, tp,
           a.per_node == b.per_node && a.infected_mass == b.infected_mass);
  }

  {
    auto g = generate({.family = Family::star, .n = 64}).graph;
    auto profile = StrategyProfile::uniform(64, 0.3);
    kernels::SampleMoments a, b;
    double ts =
        time_ms([&] { a = kernels::component_size_moments_serial(g, profile, 0, 2000000, 7); });
    double tp =
        time_ms([&] { b = kernels::component_size_moments_parallel(g, profile, 0, 2000000, 7); });
    report("component_size_moments", ts, tp, a.sum == b.sum && a.sum_sq == b.sum_sq);
  }

  {
    auto g = generate({.family = Family::gnp, .n = 48, .edge_probability = 0.08, .seed = 3}).graph;
    GameConfig cfg{1, 1, 1};
    auto profile = StrategyProfile::uniform(48, 0.25);
    kernels::CostMoments a, b;
    double ts = time_ms([&] { a = kernels::cost_samples_serial(g, cfg, profile, 500000, 11); });
    double tp = time_ms([&] { b = kernels::cost_samples_parallel(g, cfg, profile, 500000, 11); });
    report("cost_samples", ts, tp,
           a.secure_count == b.secure_count && a.infected_count == b.infected_count &&
               a.sum_x == b.sum_x && a.sum_y == b.sum_y && a.sum_xx == b.sum_xx &&
               a.sum_yy == b.sum_yy && a.sum_xy == b.sum_xy);
  }

  {
    auto g = generate({.family = Family::gnp, .n = 20, .edge_probability = 0.2, .seed = 5}).graph;
    GameConfig cfg{1, 1, 1};
    kernels::SubsetScanResult a, b;
    double ts = time_ms([&] { a = kernels::min_cost_secure_subset_serial(g, cfg); });
    double tp = time_ms([&] { b = kernels::min_cost_secure_subset_parallel(g, cfg); });
    report("min_cost_secure_subset", ts, tp, a.mask == b.mask && a.cost == b.cost);
  }

  {
    auto g = generate({.family = Family::star, .n = 18}).graph;
    GameConfig cfg{1, 1, 1};
    kernels::SubsetScanResult a, b;
    double ts = time_ms([&] { a = kernels::worst_nash_profile_serial(g, cfg); });
    double tp = time_ms([&] { b = kernels::worst_nash_profile_parallel(g, cfg); });
    report("worst_nash_profile", ts, tp, a.mask == b.mask && a.cost == b.cost);
  }

  return failures;
}
