#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "inoc/contagion.hpp"
#include "inoc/errors.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"
#include "inoc/rng.hpp"

using namespace inoc;

namespace {

Graph cut_grid() { return generate({.family = Family::grid, .rows = 2, .cols = 6}).graph; }
const std::vector<NodeId> kGridSecure{2, 8};  // middle column; components {4, 6}

}  // namespace

TEST_CASE("threshold-1 spread floods the start's component") {
  auto g = cut_grid();
  auto outcome = spread(g, kGridSecure, {0}, 1);
  CHECK(outcome.infected == std::vector<NodeId>{0, 1, 6, 7});  // the size-4 side

  auto right = spread(g, kGridSecure, {5}, 1);
  CHECK(right.infected.size() == 6);

  auto blocked = spread(g, kGridSecure, {2}, 1);  // secure start ignites nothing
  CHECK(blocked.infected.empty());
}

TEST_CASE("threshold-2 on the bistar infects everyone from any pair") {
  auto g = generate({.family = Family::bistar, .n = 6}).graph;
  for (NodeId a = 0; a < 6; ++a)
    for (NodeId b = a + 1; b < 6; ++b) {
      auto outcome = spread(g, {}, {a, b}, 2);
      CHECK(outcome.infected.size() == 6);
    }
}

TEST_CASE("threshold-2 on the star stops at the chosen nodes") {
  auto g = generate({.family = Family::star, .n = 8}).graph;
  auto outcome = spread(g, {}, {0, 3}, 2);  // root plus one leaf
  CHECK(outcome.infected == std::vector<NodeId>{0, 3});

  auto pair_of_leaves = spread(g, {}, {2, 5}, 2);  // root gains two hot neighbors
  CHECK(pair_of_leaves.infected == std::vector<NodeId>{0, 2, 5});
}

TEST_CASE("spread validates arguments") {
  auto g = generate({.family = Family::star, .n = 5}).graph;
  CHECK_THROWS_AS(spread(g, {}, {0, 1}, 1), PreconditionError);
  CHECK_THROWS_AS(spread(g, {}, {0}, 2), PreconditionError);
  CHECK_THROWS_AS(spread(g, {}, {0, 0}, 2), PreconditionError);
  CHECK_THROWS_AS(spread(g, {}, {0}, 3), PreconditionError);
  CHECK_THROWS_AS(spread(g, {9}, {0}, 1), PreconditionError);
}

TEST_CASE("secure starts are wasted, not blocking") {
  auto g = generate({.family = Family::bistar, .n = 6}).graph;
  auto outcome = spread(g, {0}, {0, 1}, 2);  // one start secure
  CHECK(outcome.infected == std::vector<NodeId>{1});
}

TEST_CASE("exact infection probability: star leaf at threshold 2 is 2/n") {
  for (int n : {8, 20}) {
    auto g = generate({.family = Family::star, .n = n}).graph;
    auto p = infection_probability_exact(g, {}, n - 1, 2);
    CHECK(p.favorable == static_cast<std::uint64_t>(n - 1));
    CHECK(p.total == static_cast<std::uint64_t>(n) * (n - 1) / 2);
    CHECK(p.value() == doctest::Approx(2.0 / n).epsilon(1e-12));
  }
}

TEST_CASE("exact infection probability: threshold 1") {
  auto connected = generate({.family = Family::cycle, .n = 9}).graph;
  CHECK(infection_probability_exact(connected, {}, 4, 1).value() == 1.0);

  auto g = cut_grid();
  auto p = infection_probability_exact(g, kGridSecure, 5, 1);  // size-6 side
  CHECK(p.favorable == 6);
  CHECK(p.total == 12);

  CHECK_THROWS_AS(infection_probability_exact(g, kGridSecure, 2, 1), PreconditionError);
}

TEST_CASE("threshold-1 infected set equals the attack component") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 30, .edge_probability = 0.08, .seed = seed})
                 .graph;
    CounterRng rng = CounterRng::for_sample(seed, 1);
    std::vector<NodeId> secure;
    for (NodeId v = 0; v < 30; ++v)
      if (rng.next_unit() < 0.25) secure.push_back(v);
    auto flags = node_flags(30, secure);
    NodeId start = static_cast<NodeId>(rng.next_below(30));
    auto outcome = spread(g, secure, {start}, 1);
    if (flags[start]) {
      CHECK(outcome.infected.empty());
      continue;
    }
    auto labels = attack_components(g, flags);
    std::vector<NodeId> comp;
    for (NodeId v = 0; v < 30; ++v)
      if (!flags[v] && labels.comp[v] == labels.comp[start]) comp.push_back(v);
    CHECK(outcome.infected == comp);
  }
}

TEST_CASE("enlarging the secure set never enlarges the infection") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 24, .edge_probability = 0.12, .seed = seed})
                 .graph;
    CounterRng rng = CounterRng::for_sample(seed, 2);
    std::vector<NodeId> small, big;
    for (NodeId v = 0; v < 24; ++v) {
      double u = rng.next_unit();
      if (u < 0.15) small.push_back(v);
      if (u < 0.35) big.push_back(v);  // superset of small
    }
    NodeId a = static_cast<NodeId>(rng.next_below(24));
    NodeId b = static_cast<NodeId>((a + 1 + rng.next_below(23)) % 24);
    for (int threshold : {1, 2}) {
      std::vector<NodeId> starts = threshold == 1 ? std::vector<NodeId>{a}
                                                  : std::vector<NodeId>{std::min(a, b),
                                                                        std::max(a, b)};
      auto loose = spread(g, small, starts, threshold);
      auto tight = spread(g, big, starts, threshold);
      CHECK(std::includes(loose.infected.begin(), loose.infected.end(), tight.infected.begin(),
                          tight.infected.end()));
    }
  }
}

TEST_CASE("threshold-2 fixpoint does not depend on processing order") {
  // reference: sweep to fixpoint instead of a queue
  auto sweep_spread = [](const Graph& g, const std::vector<std::uint8_t>& secure, NodeId a,
                         NodeId b) {
    const int n = g.node_count();
    std::vector<std::uint8_t> infected(n, 0);
    if (!secure[a]) infected[a] = 1;
    if (!secure[b]) infected[b] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId v = n - 1; v >= 0; --v) {  // deliberately reversed order
        if (secure[v] || infected[v]) continue;
        int hot = 0;
        for (NodeId w : g.neighbors(v)) hot += infected[w];
        if (hot >= 2) {
          infected[v] = 1;
          changed = true;
        }
      }
    }
    std::vector<NodeId> out;
    for (NodeId v = 0; v < n; ++v)
      if (infected[v]) out.push_back(v);
    return out;
  };

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 20, .edge_probability = 0.25, .seed = seed})
                 .graph;
    CounterRng rng = CounterRng::for_sample(seed, 3);
    std::vector<NodeId> secure;
    for (NodeId v = 0; v < 20; ++v)
      if (rng.next_unit() < 0.2) secure.push_back(v);
    auto flags = node_flags(20, secure);
    for (NodeId a = 0; a < 20; ++a)
      for (NodeId b = a + 1; b < 20; ++b)
        CHECK(spread(g, secure, {a, b}, 2).infected == sweep_spread(g, flags, a, b));
  }
}
