#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "inoc/errors.hpp"
#include "inoc/generators.hpp"
#include "inoc/graph.hpp"
#include "inoc/rng.hpp"

using namespace inoc;

namespace {

// 2x6 grid with the middle column secured leaves components of sizes 4 and 6;
// the canonical small instance used across the suites.
Graph two_by_six_grid() { return generate({.family = Family::grid, .rows = 2, .cols = 6}).graph; }

Graph path(int n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph::from_edges(0, {}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), PreconditionError);
  auto g = Graph::from_edges(3, {{2, 0}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.neighbors(0) == std::vector<NodeId>{1, 2});
}

TEST_CASE("connected components: star, cut grid, edgeless") {
  auto star = generate({.family = Family::star, .n = 6}).graph;
  CHECK(connected_components(star).size() == 1);
  CHECK(connected_components(star)[0].size() == 6);

  auto grid = two_by_six_grid();
  auto labels = attack_components(grid, node_flags(12, {2, 8}));
  std::vector<int> sizes = labels.sizes;
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{4, 6});

  auto edgeless = Graph::from_edges(3, {});
  auto comps = connected_components(edgeless);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<NodeId>{0});
  CHECK(comps[1] == std::vector<NodeId>{1});
  CHECK(comps[2] == std::vector<NodeId>{2});
}

TEST_CASE("components partition the nodes and contain every edge") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 40, .edge_probability = 0.05, .seed = seed})
                 .graph;
    auto comps = connected_components(g);
    std::vector<int> owner(40, -1);
    int total = 0;
    for (std::size_t c = 0; c < comps.size(); ++c)
      for (NodeId v : comps[c]) {
        CHECK(owner[v] == -1);
        owner[v] = static_cast<int>(c);
        ++total;
      }
    CHECK(total == 40);
    for (auto [u, v] : g.edge_list()) CHECK(owner[u] == owner[v]);
  }
}

TEST_CASE("induced subgraph relabels and keeps the original ids") {
  auto cycle = generate({.family = Family::cycle, .n = 4}).graph;
  auto sub = induced_subgraph(cycle, {0, 1, 2});
  CHECK(sub.graph.node_count() == 3);
  CHECK(sub.graph.edge_count() == 2);  // a 3-node path
  CHECK(sub.original == std::vector<NodeId>{0, 1, 2});

  auto same = induced_subgraph(cycle, {0, 1, 2, 3});
  CHECK(same.graph.edge_list() == cycle.edge_list());

  auto star = generate({.family = Family::star, .n = 5}).graph;
  auto leaves = induced_subgraph(star, {1, 2, 3, 4});
  CHECK(leaves.graph.edge_count() == 0);

  CHECK_THROWS_AS(induced_subgraph(cycle, {0, 7}), PreconditionError);
}

TEST_CASE("max degree") {
  CHECK(max_degree(generate({.family = Family::star, .n = 9}).graph) == 8);
  CHECK(max_degree(generate({.family = Family::cycle, .n = 17}).graph) == 2);
  CHECK(max_degree(Graph::from_edges(4, {})) == 0);
  CHECK(max_degree(make_subdivided_regular(24, 3).graph) == 3);
}

TEST_CASE("centroid examples") {
  CHECK(tree_centroid(path(9)) == 4);
  CHECK(tree_centroid(generate({.family = Family::star, .n = 9}).graph) == 0);
  CHECK(tree_centroid(Graph::from_edges(1, {})) == 0);
  CHECK_THROWS_AS(tree_centroid(generate({.family = Family::cycle, .n = 5}).graph),
                  PreconditionError);
}

TEST_CASE("centroid splits every random tree into halves") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(CounterRng::for_sample(seed, 9).next_below(120));
    auto g = generate({.family = Family::random_tree, .n = n, .seed = seed}).graph;
    NodeId c = tree_centroid(g);
    std::vector<std::uint8_t> removed(n, 0);
    removed[c] = 1;
    auto labels = attack_components(g, removed);
    for (int size : labels.sizes) CHECK(2 * size <= n);
  }
}

TEST_CASE("is_tree") {
  CHECK(is_tree(path(5)));
  CHECK_FALSE(is_tree(generate({.family = Family::cycle, .n = 5}).graph));
  // right edge count but disconnected: two triangles minus an edge
  auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  CHECK_FALSE(is_tree(g));
}

TEST_CASE("edge list round trip and rejection") {
  auto g = two_by_six_grid();
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in(out.str());
  auto back = read_edge_list(in);
  CHECK(back.node_count() == g.node_count());
  CHECK(back.edge_list() == g.edge_list());

  auto parse = [](const std::string& text) {
    std::istringstream stream(text);
    return read_edge_list(stream);
  };
  CHECK(parse("# comment\n\n3 1\n0 2\n").edge_count() == 1);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), PreconditionError);        // self-loop
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), PreconditionError);   // duplicate
  CHECK_THROWS_AS(parse("3 1\n2 1\n"), PreconditionError);        // u >= v
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), PreconditionError);        // count mismatch
  CHECK_THROWS_AS(parse(""), PreconditionError);                  // no header
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), PreconditionError);        // out of range
}

TEST_CASE("vertex split stats match removal by brute force") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto g = generate({.family = Family::gnp, .n = 24, .edge_probability = 0.09, .seed = seed})
                 .graph;
    const int n = g.node_count();
    std::vector<std::uint8_t> removed(n, 0);
    removed[seed % n] = 1;  // exercise the pre-removed path too
    auto stats = vertex_split_stats(g, removed);
    auto base = attack_components(g, removed);
    for (NodeId v = 0; v < n; ++v) {
      if (removed[v]) continue;
      auto with_v = removed;
      with_v[v] = 1;
      auto labels = attack_components(g, with_v);
      long long sum_sq = 0;
      int max_part = 0;
      for (int c = 0; c < labels.count; ++c) {
        // only parts that came from v's own component
        NodeId member = -1;
        for (NodeId w = 0; w < n && member < 0; ++w)
          if (!with_v[w] && labels.comp[w] == c) member = w;
        if (base.comp[member] != base.comp[v]) continue;
        long long size = labels.sizes[c];
        sum_sq += size * size;
        max_part = std::max<int>(max_part, labels.sizes[c]);
      }
      CHECK(stats.part_sum_sq[v] == sum_sq);
      CHECK(stats.max_part[v] == max_part);
    }
  }
}
