#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "inoc/errors.hpp"
#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"
#include "inoc/rng.hpp"

using namespace inoc;

namespace {

Graph cut_grid() { return generate({.family = Family::grid, .rows = 2, .cols = 6}).graph; }
const std::vector<NodeId> kGridSecure{2, 8};

StrategyProfile star_interior(int n) {
  // the closed-form interior equilibrium for C=1, L=2 (t = n/2)
  StrategyProfile p = StrategyProfile::uniform(n, 5.0 / 9.0);
  p.a[0] = 5.0 / 41.0;
  return p;
}

}  // namespace

TEST_CASE("game config validation and threshold value") {
  CHECK_THROWS_AS(GameConfig(Rational(0), Rational(1)), PreconditionError);
  CHECK_THROWS_AS(GameConfig(Rational(1), Rational(-1)), PreconditionError);
  CHECK_THROWS_AS(GameConfig(Rational(1), Rational(1), 3), PreconditionError);
  GameConfig cfg = GameConfig::from_decimal("0.3", "1", 1);
  CHECK(cfg.t_exact(12) == Rational(18, 5));
  CHECK(cfg.t(12) == doctest::Approx(3.6));
}

TEST_CASE("profile classification") {
  CHECK(StrategyProfile::zeros(4).pure());
  CHECK(StrategyProfile::ones(4).pure());
  CHECK_FALSE(StrategyProfile::uniform(4, 0.5).pure());
  CHECK(StrategyProfile::uniform(4, 0.5).fractional());
  CHECK_FALSE(StrategyProfile::pure_secure(4, {1}).fractional());
  StrategyProfile out_of_range{{0.5, 1.2}};
  CHECK_THROWS_AS(out_of_range.validate(2), PreconditionError);
}

TEST_CASE("cost of the cut grid: 2 + 52/12 exactly") {
  auto report = cost_pure(cut_grid(), GameConfig{1, 1, 1}, kGridSecure);
  CHECK(std::abs(report.total - (2.0 + 52.0 / 12.0)) < 1e-12);
  CHECK(report.mode == CostMode::exact_formula);
  double per_node_sum = std::accumulate(report.per_node.begin(), report.per_node.end(), 0.0);
  CHECK(std::abs(per_node_sum - report.total) < 1e-9);
}

TEST_CASE("cost with everyone secure is C*n") {
  auto g = generate({.family = Family::cycle, .n = 7}).graph;
  std::vector<NodeId> all(7);
  std::iota(all.begin(), all.end(), 0);
  CHECK(cost_pure(g, GameConfig{Rational(3, 2), 1, 1}, all).total == doctest::Approx(10.5));
}

TEST_CASE("threshold-2 bistar with both centers secured") {
  auto g = generate({.family = Family::bistar, .n = 6}).graph;
  auto report = cost_pure(g, GameConfig{1, 1, 2}, {0, 1});
  CHECK(report.total == doctest::Approx(2.0 + 4.0 / 3.0).epsilon(1e-12));
  // each leaf ignites only as a start: (n-1)/C(n,2) = 1/3
  for (NodeId leaf = 2; leaf < 6; ++leaf)
    CHECK(report.per_node[leaf] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("exact S on the star matches the closed form") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  auto profile = star_interior(10);
  // S(root) = 1 + (1-p)(n-1) = 5
  CHECK(expected_component_size_exact(g, profile, 0) == doctest::Approx(5.0).epsilon(1e-12));
  // S(leaf) = q + (1-q)(2 + (1-p)(n-2)) = 5
  CHECK(expected_component_size_exact(g, profile, 3) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("exact S trivia: all-zero profile and a lone insecure node") {
  auto g = cut_grid();
  auto zero = StrategyProfile::zeros(12);
  CHECK(expected_component_size_exact(g, zero, 0) == 12.0);

  StrategyProfile lonely = StrategyProfile::ones(12);
  lonely.a[4] = 0.0;
  CHECK(expected_component_size_exact(g, lonely, 4) == 1.0);
}

TEST_CASE("exact S is symmetric on the uniform cycle") {
  auto g = generate({.family = Family::cycle, .n = 4}).graph;
  auto profile = StrategyProfile::uniform(4, 0.5);
  double s0 = expected_component_size_exact(g, profile, 0);
  for (NodeId v = 1; v < 4; ++v)
    CHECK(expected_component_size_exact(g, profile, v) == doctest::Approx(s0).epsilon(1e-12));
}

TEST_CASE("exact S is independent of a_i") {
  auto g = generate({.family = Family::cycle, .n = 6}).graph;
  StrategyProfile profile = StrategyProfile::uniform(6, 0.3);
  double base = expected_component_size_exact(g, profile, 2);
  profile.a[2] = 0.0;
  CHECK(expected_component_size_exact(g, profile, 2) == doctest::Approx(base).epsilon(1e-12));
  profile.a[2] = 0.9;
  CHECK(expected_component_size_exact(g, profile, 2) == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("exact S guards") {
  auto g = generate({.family = Family::star, .n = 22}).graph;
  auto ones = StrategyProfile::ones(22);
  CHECK_THROWS_AS(expected_component_size_exact(g, ones, 0), PreconditionError);
  auto fractional = StrategyProfile::uniform(22, 0.5);
  CHECK_THROWS_AS(expected_component_size_exact(g, fractional, 0), PreconditionError);  // cap
  // raising the cap admits the 2^21 enumeration; S(root) = 1 + 21*(1-p)
  CHECK(expected_component_size_exact(g, fractional, 0, 21) ==
        doctest::Approx(11.5).epsilon(1e-9));
}

TEST_CASE("monte carlo S: pure profile has zero variance") {
  auto g = cut_grid();
  auto est = expected_component_size_mc(g, StrategyProfile::pure_secure(12, kGridSecure), 0, 200,
                                        9);
  CHECK(est.mean == 4.0);
  CHECK(est.half_width == 0.0);
}

TEST_CASE("monte carlo S: isolated node is exactly one") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  StrategyProfile profile = StrategyProfile::ones(10);
  profile.a[5] = 0.0;
  auto est = expected_component_size_mc(g, profile, 5, 500, 4);
  CHECK(est.mean == 1.0);
}

TEST_CASE("monte carlo S agrees with the exact oracle on the star") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  auto est = expected_component_size_mc(g, star_interior(10), 0, 1000000, 2024);
  CHECK(est.half_width <= 0.02);
  CHECK(std::abs(est.mean - 5.0) <= est.half_width);
}

TEST_CASE("monte carlo half-width shrinks like 1/sqrt(samples)") {
  auto g = generate({.family = Family::cycle, .n = 12}).graph;
  auto profile = StrategyProfile::uniform(12, 0.4);
  auto small = expected_component_size_mc(g, profile, 0, 20000, 5);
  auto large = expected_component_size_mc(g, profile, 0, 80000, 5);
  double ratio = large.half_width / small.half_width;
  CHECK(ratio > 0.4);
  CHECK(ratio < 0.6);
}

TEST_CASE("individual cost basics") {
  auto g = generate({.family = Family::star, .n = 20}).graph;
  GameConfig cfg{Rational(7, 2), 1, 1};
  auto ones = StrategyProfile::ones(20);
  CHECK(individual_cost(g, cfg, ones, 4, EvalMode::exact) == doctest::Approx(3.5));

  // all-zero on a connected graph: everyone pays L
  auto cycle = generate({.family = Family::cycle, .n = 8}).graph;
  GameConfig unit{1, Rational(5, 4), 1};
  auto zeros = StrategyProfile::zeros(8);
  for (NodeId v = 0; v < 8; ++v)
    CHECK(individual_cost(cycle, unit, zeros, v, EvalMode::exact) == doctest::Approx(1.25));
}

TEST_CASE("individual cost: threshold-2 insecure star leaf pays 2L/n") {
  auto g = generate({.family = Family::star, .n = 20}).graph;
  GameConfig cfg{1, 1, 2};
  auto zeros = StrategyProfile::zeros(20);
  CHECK(individual_cost(g, cfg, zeros, 7, EvalMode::exact) ==
        doctest::Approx(2.0 / 20).epsilon(1e-12));
}

TEST_CASE("profile cost: interior star equilibrium costs C*n") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  GameConfig cfg{1, 2, 1};
  auto report = cost_profile(g, cfg, star_interior(10), EvalMode::exact);
  CHECK(report.total == doctest::Approx(10.0).epsilon(1e-9));
  CHECK(report.mode == CostMode::exact_enumeration);
}

TEST_CASE("profile cost: all-zero on a connected graph costs L*n") {
  auto g = generate({.family = Family::cycle, .n = 9}).graph;
  GameConfig cfg{1, 2, 1};
  auto report = cost_profile(g, cfg, StrategyProfile::zeros(9), EvalMode::exact);
  CHECK(report.total == doctest::Approx(18.0));
  CHECK(report.mode == CostMode::exact_formula);  // routed through the pure path
}

TEST_CASE("profile cost: enumeration and monte carlo agree within the half-width") {
  auto g = generate({.family = Family::cycle, .n = 4}).graph;
  GameConfig cfg{1, 1, 1};
  auto profile = StrategyProfile::uniform(4, 0.5);
  auto exact = cost_profile(g, cfg, profile, EvalMode::exact);
  auto mc = cost_profile(g, cfg, profile, EvalMode::monte_carlo, 1000000, 31);
  CHECK(mc.half_width > 0.0);
  CHECK(std::abs(mc.total - exact.total) <= mc.half_width);
  double per_node_sum = std::accumulate(mc.per_node.begin(), mc.per_node.end(), 0.0);
  CHECK(per_node_sum == doctest::Approx(mc.total).epsilon(1e-9));
}

TEST_CASE("threshold-2 enumeration and monte carlo agree on a mixed profile") {
  auto g = generate({.family = Family::bistar, .n = 6}).graph;
  GameConfig cfg{1, 1, 2};
  auto profile = StrategyProfile::uniform(6, 0.3);
  auto exact = cost_profile(g, cfg, profile, EvalMode::exact);
  auto mc = cost_profile(g, cfg, profile, EvalMode::monte_carlo, 400000, 17);
  CHECK(std::abs(mc.total - exact.total) <= mc.half_width);
  // per-node too: each estimate has at most the total's spread
  for (NodeId v = 0; v < 6; ++v)
    CHECK(std::abs(mc.per_node[v] - exact.per_node[v]) <= 0.01);
}

TEST_CASE("three-way agreement on pure profiles") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 12, .edge_probability = 0.25, .seed = seed})
                 .graph;
    GameConfig cfg{Rational(4, 5), Rational(13, 10), 1};
    CounterRng rng = CounterRng::for_sample(seed, 0);
    std::vector<NodeId> secure;
    for (NodeId v = 0; v < 12; ++v)
      if (rng.next_unit() < 0.3) secure.push_back(v);
    auto profile = StrategyProfile::pure_secure(12, secure);

    double formula = cost_pure(g, cfg, secure).total;
    double routed = cost_profile(g, cfg, profile, EvalMode::exact).total;
    double summed = 0.0;
    for (NodeId v = 0; v < 12; ++v) summed += individual_cost(g, cfg, profile, v, EvalMode::exact);
    CHECK(std::abs(formula - routed) < 1e-9);
    CHECK(std::abs(formula - summed) < 1e-9);
  }
}

TEST_CASE("per-node costs stay within [0, max(C, L)]") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 10, .edge_probability = 0.3, .seed = seed})
                 .graph;
    GameConfig cfg{Rational(3, 4), Rational(9, 5), 1};
    CounterRng rng = CounterRng::for_sample(seed, 1);
    StrategyProfile profile = StrategyProfile::zeros(10);
    for (NodeId v = 0; v < 10; ++v) profile.a[v] = rng.next_unit();
    auto report = cost_profile(g, cfg, profile, EvalMode::exact);
    CHECK(report.total >= 0.0);
    for (double cost : report.per_node) {
      CHECK(cost >= 0.0);
      CHECK(cost <= std::max(cfg.c(), cfg.l()) + 1e-12);
    }
  }
}

TEST_CASE("monte carlo rejects sample counts that could overflow the accumulators") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  CHECK_THROWS_AS(
      expected_component_size_mc(g, StrategyProfile::uniform(10, 0.5), 0, 0, 1),
      PreconditionError);
  CHECK_THROWS_AS(expected_component_size_mc(g, StrategyProfile::uniform(10, 0.5), 0,
                                             200000000000000000ULL, 1),
                  PreconditionError);
}
