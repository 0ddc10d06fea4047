#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "inoc/equilibria.hpp"
#include "inoc/errors.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"
#include "inoc/rng.hpp"

using namespace inoc;

TEST_CASE("all-zero is an equilibrium whenever C >= L") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto tree = generate({.family = Family::random_tree, .n = 14, .seed = seed}).graph;
    GameConfig cfg{Rational(3, 2), 1, 1};
    auto report = is_nash(tree, cfg, StrategyProfile::zeros(14));
    CHECK(report.is_nash);
    CHECK(report.worst_violation == 0.0);
  }
}

TEST_CASE("all-one is an equilibrium when C <= L/n") {
  auto g = generate({.family = Family::cycle, .n = 10}).graph;
  GameConfig cfg{Rational(1, 10), 1, 1};  // C = L/n exactly
  CHECK(is_nash(g, cfg, StrategyProfile::ones(10)).is_nash);

  GameConfig too_pricey{Rational(1, 5), 1, 1};
  CHECK_FALSE(is_nash(g, too_pricey, StrategyProfile::ones(10)).is_nash);
}

TEST_CASE("star interior equilibrium certifies exactly") {
  GameConfig cfg{1, 2, 1};
  auto solution = star_fractional(10, cfg.C, cfg.L);
  CHECK(solution.root_q == doctest::Approx(5.0 / 41).epsilon(1e-15));
  CHECK(solution.leaf_p == doctest::Approx(5.0 / 9).epsilon(1e-15));

  auto g = generate({.family = Family::star, .n = 10}).graph;
  auto report = is_nash(g, cfg, solution.profile(10), 1e-9, EvalMode::exact);
  CHECK(report.is_nash);
  CHECK(report.worst_violation <= 1e-9);
  for (const auto& cond : report.per_node) CHECK(cond.action == ActionClass::interior);
}

TEST_CASE("star closed form across n and t") {
  CHECK(star_fractional(4, Rational(1, 2), 1).root_q == doctest::Approx(2.0 / 5).epsilon(1e-15));
  CHECK(star_fractional(4, Rational(1, 2), 1).leaf_p == doctest::Approx(2.0 / 3).epsilon(1e-15));
  // t -> n pushes the root probability to zero
  CHECK(star_fractional(50, Rational(99, 100), 1).root_q < 0.01);
  CHECK_THROWS_AS(star_fractional(10, Rational(2), 1), PreconditionError);      // C >= L
  CHECK_THROWS_AS(star_fractional(10, Rational(1, 10), 1), PreconditionError);  // C <= L/n
}

TEST_CASE("monte carlo certification is three-valued") {
  auto g = generate({.family = Family::star, .n = 10}).graph;
  GameConfig cfg{1, 2, 1};
  auto profile = star_fractional(10, cfg.C, cfg.L).profile(10);
  // tiny tolerance + small sample: the interval straddles the threshold
  auto vague = is_nash(g, cfg, profile, 1e-9, EvalMode::monte_carlo, 2000, 3);
  CHECK(vague.verdict == Verdict::inconclusive);
  CHECK_FALSE(vague.is_nash);
  // a broad tolerance certifies
  auto sure = is_nash(g, cfg, profile, 0.5, EvalMode::monte_carlo, 200000, 3);
  CHECK(sure.verdict == Verdict::yes);
  // a profile far from equilibrium is rejected even with noise
  auto wrong = is_nash(g, GameConfig{Rational(1, 100), 1, 1}, StrategyProfile::zeros(10), 1e-3,
                       EvalMode::monte_carlo, 50000, 3);
  CHECK(wrong.verdict == Verdict::no);
}

TEST_CASE("best responses: star with t = n sheds inoculations") {
  auto g = generate({.family = Family::star, .n = 5}).graph;
  GameConfig cfg{1, 1, 1};  // t = 5
  auto result = best_response_dynamics(g, cfg, StrategyProfile::ones(5));
  CHECK(result.converged);
  // asynchronous updates: nodes 0..3 see S < 5 and switch off; by node 4's
  // turn S(4) = 5 = t, so the tie rule keeps its inoculation
  CHECK(result.profile.a == std::vector<double>{0, 0, 0, 0, 1});
  CHECK(is_nash(g, cfg, result.profile).is_nash);
}

TEST_CASE("best responses handle instances where synchronous updates oscillate") {
  auto g = Graph::from_edges(2, {{0, 1}});
  GameConfig cfg{Rational(3, 4), 1, 1};  // t = 1.5: all-zero and all-one both unstable
  auto result = best_response_dynamics(g, cfg, StrategyProfile::zeros(2));
  CHECK(result.converged);
  CHECK(is_nash(g, cfg, result.profile, 0.0, EvalMode::exact).is_nash);
}

TEST_CASE("best responses: already at a fixpoint") {
  auto g = generate({.family = Family::cycle, .n = 8}).graph;
  GameConfig cfg{2, 1, 1};
  auto result = best_response_dynamics(g, cfg, StrategyProfile::zeros(8));
  CHECK(result.converged);
  CHECK(result.rounds == 1);
  CHECK(result.profile.a == StrategyProfile::zeros(8).a);
}

TEST_CASE("best responses: cycle with t = 2 leaves short insecure runs") {
  auto g = generate({.family = Family::cycle, .n = 9}).graph;
  GameConfig cfg{Rational(2, 9), 1, 1};  // t = 2
  auto result = best_response_dynamics(g, cfg, StrategyProfile::zeros(9));
  CHECK(result.converged);
  auto report = is_nash(g, cfg, result.profile, 0.0, EvalMode::exact);
  CHECK(report.is_nash);
  // every insecure run between secured nodes has length <= 2
  auto flags = result.profile.secure_flags();
  auto labels = attack_components(g, flags);
  for (int size : labels.sizes) CHECK(size <= 2);
}

TEST_CASE("best responses converge from both orders on random graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 16, .edge_probability = 0.2, .seed = seed})
                 .graph;
    GameConfig cfg{Rational(1, 3), 1, 1};
    for (auto order : {UpdateOrder::round_robin, UpdateOrder::random}) {
      auto result = best_response_dynamics(g, cfg, StrategyProfile::zeros(16), order, seed);
      CHECK(result.converged);
      CHECK(is_nash(g, cfg, result.profile, 0.0, EvalMode::exact).is_nash);
    }
  }
}

TEST_CASE("best responses reject bad inputs") {
  auto g = generate({.family = Family::star, .n = 5}).graph;
  CHECK_THROWS_AS(best_response_dynamics(g, GameConfig{1, 1, 2}, StrategyProfile::zeros(5)),
                  PreconditionError);
  CHECK_THROWS_AS(best_response_dynamics(g, GameConfig{1, 1, 1}, StrategyProfile::uniform(5, 0.5)),
                  PreconditionError);
}

TEST_CASE("worst pure equilibrium: star with C = L") {
  auto g = generate({.family = Family::star, .n = 6}).graph;
  auto result = worst_pure_nash(g, GameConfig{1, 1, 1});
  CHECK(result.cost == doctest::Approx(6.0));
  CHECK(result.profile.a == StrategyProfile::zeros(6).a);
}

TEST_CASE("worst pure equilibrium: threshold-2 bistar sits at L*n") {
  auto g = generate({.family = Family::bistar, .n = 6}).graph;
  auto result = worst_pure_nash(g, GameConfig{1, 1, 2});
  CHECK(result.cost == doctest::Approx(6.0));
  CHECK(result.profile.a == StrategyProfile::zeros(6).a);
}

TEST_CASE("worst pure equilibrium: K4 under cheap inoculation") {
  auto g = generate({.family = Family::complete, .n = 4}).graph;
  auto result = worst_pure_nash(g, GameConfig{Rational(1, 5), 1, 1});  // t = 0.8
  CHECK(result.cost <= 0.8 + 1e-9);  // min{C,L} * n
}

TEST_CASE("worst pure equilibrium respects the cap") {
  auto g = generate({.family = Family::star, .n = 22}).graph;
  CHECK_THROWS_AS(worst_pure_nash(g, GameConfig{1, 1, 1}), PreconditionError);
}

TEST_CASE("every equilibrium found stays below min{C,L} * n") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    int n = 6 + static_cast<int>(seed % 5);
    auto g = generate({.family = Family::gnp, .n = n, .edge_probability = 0.35, .seed = seed})
                 .graph;
    CounterRng rng = CounterRng::for_sample(seed, 4);
    GameConfig cfg{Rational(1 + static_cast<long long>(rng.next_below(40)), 10),
                   Rational(1 + static_cast<long long>(rng.next_below(40)), 10), 1};
    auto result = worst_pure_nash(g, cfg);
    CHECK(result.cost <= std::min(cfg.c(), cfg.l()) * n + 1e-9);
    CHECK(is_nash(g, cfg, result.profile, 0.0, EvalMode::exact).is_nash);
  }
}

TEST_CASE("uniform interior equilibrium on the 12-cycle") {
  auto g = generate({.family = Family::cycle, .n = 12}).graph;
  GameConfig cfg = GameConfig::from_decimal("0.3", "1", 1);  // t = 3.6
  double p = uniform_fractional(g, cfg, 1e-6, EvalMode::exact);
  CHECK(p > 0.0);
  CHECK(p < 1.0);
  auto profile = StrategyProfile::uniform(12, p);
  double s0 = expected_component_size_exact(g, profile, 0);
  CHECK(std::abs(s0 - 3.6) <= 1e-6);
  for (NodeId v = 1; v < 12; ++v)
    CHECK(std::abs(expected_component_size_exact(g, profile, v) - s0) <= 1e-9);
  CHECK(is_nash(g, cfg, profile, 1e-5, EvalMode::exact).is_nash);
}

TEST_CASE("uniform interior equilibrium on K8 costs C*n") {
  auto g = generate({.family = Family::complete, .n = 8}).graph;
  GameConfig cfg{Rational(1, 2), 1, 1};  // t = 4
  double p = uniform_fractional(g, cfg, 1e-9, EvalMode::exact);
  // on K_n, S(p) = 1 + (n-1)(1-p), so p* = 4/7
  CHECK(p == doctest::Approx(4.0 / 7).epsilon(1e-6));
  auto cost = cost_profile(g, cfg, StrategyProfile::uniform(8, p), EvalMode::exact);
  CHECK(cost.total == doctest::Approx(4.0).epsilon(1e-7));
}

TEST_CASE("uniform interior equilibrium near the t = n edge") {
  auto g = generate({.family = Family::cycle, .n = 10}).graph;
  GameConfig cfg{Rational(99, 100), 1, 1};  // t = 9.9
  double p = uniform_fractional(g, cfg, 1e-7, EvalMode::exact);
  CHECK(p < 0.05);
}

TEST_CASE("uniform solver guards") {
  auto bistar = generate({.family = Family::bistar, .n = 8}).graph;
  GameConfig cfg{Rational(1, 2), 1, 1};
  CHECK_THROWS_AS(uniform_fractional(bistar, cfg, 1e-6), PreconditionError);  // not transitive
  auto cycle = generate({.family = Family::cycle, .n = 8}).graph;
  CHECK_THROWS_AS(uniform_fractional(cycle, GameConfig{2, 1, 1}, 1e-6), PreconditionError);
}

TEST_CASE("fractional equilibria cost C*n for every solver output") {
  auto star = generate({.family = Family::star, .n = 8}).graph;
  GameConfig star_cfg{Rational(2, 5), 1, 1};
  auto ne = star_fractional(8, star_cfg.C, star_cfg.L);
  CHECK(cost_profile(star, star_cfg, ne.profile(8), EvalMode::exact).total ==
        doctest::Approx(8 * 0.4).epsilon(1e-9));

  auto cycle = generate({.family = Family::cycle, .n = 9}).graph;
  GameConfig cycle_cfg{Rational(1, 2), 1, 1};
  double p = uniform_fractional(cycle, cycle_cfg, 1e-10, EvalMode::exact);
  CHECK(cost_profile(cycle, cycle_cfg, StrategyProfile::uniform(9, p), EvalMode::exact).total ==
        doctest::Approx(4.5).epsilon(1e-8));
}
