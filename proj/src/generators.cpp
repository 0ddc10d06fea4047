#include "inoc/generators.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

#include "inoc/errors.hpp"
#include "inoc/rng.hpp"

namespace inoc {

Family family_from_string(const std::string& name) {
  if (name == "star") return Family::star;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "grid") return Family::grid;
  if (name == "bistar") return Family::bistar;
  if (name == "subdivided_regular") return Family::subdivided_regular;
  if (name == "gnp") return Family::gnp;
  if (name == "random_tree") return Family::random_tree;
  throw PreconditionError("unknown family: " + name);
}

std::string family_name(Family family) {
  switch (family) {
    case Family::star: return "star";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::grid: return "grid";
    case Family::bistar: return "bistar";
    case Family::subdivided_regular: return "subdivided_regular";
    case Family::gnp: return "gnp";
    case Family::random_tree: return "random_tree";
  }
  throw PreconditionError("unknown family enum");
}

namespace {

GeneratedGraph make_star(int n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
  GraphTags tags;
  tags.tree = true;
  tags.planar_hint = true;
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::star;
  return out;
}

GeneratedGraph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  GraphTags tags;
  tags.vertex_transitive = true;
  tags.planar_hint = true;
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::cycle;
  return out;
}

GeneratedGraph make_complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  GraphTags tags;
  tags.vertex_transitive = true;
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::complete;
  return out;
}

GeneratedGraph make_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  const int n = rows * cols;
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  GraphTags tags;
  tags.planar_hint = true;
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::grid;
  out.rows = rows;
  out.cols = cols;
  return out;
}

GeneratedGraph make_bistar(int n) {
  require(n >= 3, "bistar needs n >= 3");
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.emplace_back(0, 1);
  for (NodeId leaf = 2; leaf < n; ++leaf) {
    edges.emplace_back(0, leaf);
    edges.emplace_back(1, leaf);
  }
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges));
  out.family = Family::bistar;
  return out;
}

GeneratedGraph make_gnp(int n, double p, std::uint64_t seed) {
  require(n >= 1, "gnp needs n >= 1");
  require(p >= 0.0 && p <= 1.0, "gnp needs p in [0,1]");
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::uint64_t pair_index = 0;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) {
      if (CounterRng::for_sample(seed, pair_index).next_unit() < p) edges.emplace_back(u, v);
      ++pair_index;
    }
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges));
  out.family = Family::gnp;
  return out;
}

GeneratedGraph make_random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    // uniform labeled tree via a seeded Pruefer sequence
    std::vector<int> pruefer(n - 2);
    for (int k = 0; k < n - 2; ++k)
      pruefer[k] = static_cast<int>(CounterRng::for_sample(seed, k).next_below(n));
    std::vector<int> remaining(n, 1);
    for (int v : pruefer) ++remaining[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
      if (remaining[v] == 1) leaves.push(v);
    for (int v : pruefer) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(std::min(leaf, v), std::max(leaf, v));
      if (--remaining[v] == 1) leaves.push(v);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  GraphTags tags;
  tags.tree = true;
  tags.planar_hint = true;
  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::random_tree;
  return out;
}

}  // namespace

GeneratedGraph make_subdivided_regular(int n, int degree, std::uint64_t /*seed*/) {
  require(degree >= 2, "subdivided regular graph needs degree >= 2");
  require(n >= 4 * degree - 2, "subdivided regular graph needs n >= 4*degree - 2");

  // Nearest feasible base size to 2*sqrt(n/degree): m*degree even so a
  // degree-regular graph exists, m > degree so the circulant offsets are
  // distinct, and at least one internal node per path.
  const double target = 2.0 * std::sqrt(static_cast<double>(n) / degree);
  int m = -1;
  double best_gap = 0.0;
  for (int cand = degree + 1; cand <= n; ++cand) {
    if ((static_cast<long long>(cand) * degree) % 2 != 0) continue;
    if (static_cast<long long>(cand) * (2 + degree) > 2LL * n) break;
    double gap = std::abs(cand - target);
    if (m < 0 || gap < best_gap) {
      m = cand;
      best_gap = gap;
    }
  }
  require(m > 0, "no feasible base size for subdivided regular graph");

  // Circulant base: offsets 1..degree/2, plus m/2 when degree is odd (m is
  // even then, since m*degree is even).
  std::set<std::pair<int, int>> base_edges;
  for (int off = 1; off <= degree / 2; ++off)
    for (int i = 0; i < m; ++i) {
      int j = (i + off) % m;
      base_edges.insert({std::min(i, j), std::max(i, j)});
    }
  if (degree % 2 == 1)
    for (int i = 0; i < m / 2; ++i) base_edges.insert({i, i + m / 2});
  const int path_count = m * degree / 2;
  require(static_cast<int>(base_edges.size()) == path_count, "circulant base construction failed");

  const int internal_total = n - m;
  const int base_len = internal_total / path_count;
  const int longer_paths = internal_total % path_count;

  std::vector<std::pair<NodeId, NodeId>> edges;
  int next_id = m;
  int path_idx = 0;
  for (auto [u, v] : base_edges) {
    int len = base_len + (path_idx < longer_paths ? 1 : 0);
    ++path_idx;
    NodeId prev = u;
    for (int k = 0; k < len; ++k) {
      NodeId mid = next_id++;
      edges.emplace_back(std::min(prev, mid), std::max(prev, mid));
      prev = mid;
    }
    edges.emplace_back(std::min(prev, v), std::max(prev, v));
  }
  require(next_id == n, "subdivided regular node count mismatch");

  GraphTags tags;
  if (degree == 2) tags.vertex_transitive = true;  // a subdivided cycle is a cycle

  GeneratedGraph out;
  out.graph = Graph::from_edges(n, std::move(edges), tags);
  out.family = Family::subdivided_regular;
  out.base_nodes = m;
  out.branch_nodes.resize(m);
  for (int i = 0; i < m; ++i) out.branch_nodes[i] = i;
  return out;
}

GeneratedGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::star: return make_star(spec.n);
    case Family::cycle: return make_cycle(spec.n);
    case Family::complete: return make_complete(spec.n);
    case Family::grid: {
      require(spec.rows >= 1 && spec.cols >= 1, "grid needs rows and cols");
      if (spec.n > 0)
        require(spec.n == spec.rows * spec.cols, "grid n must equal rows*cols");
      return make_grid(spec.rows, spec.cols);
    }
    case Family::bistar: return make_bistar(spec.n);
    case Family::subdivided_regular: return make_subdivided_regular(spec.n, spec.degree, spec.seed);
    case Family::gnp: return make_gnp(spec.n, spec.edge_probability, spec.seed);
    case Family::random_tree: return make_random_tree(spec.n, spec.seed);
  }
  throw PreconditionError("unknown family enum");
}

}  // namespace inoc
