#include "inoc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "inoc/errors.hpp"

namespace inoc {

Graph Graph::from_edges(int n, std::vector<std::pair<NodeId, NodeId>> edges, GraphTags tags) {
  require(n >= 1, "graph needs at least one node");
  for (auto& [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require(u != v, "self-loop rejected");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    require(edges[i] != edges[i - 1], "duplicate edge rejected");

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<int>(edges.size());
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  g.tags_ = tags;
  return g;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(m_);
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v : adj_[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

ComponentLabels attack_components(const Graph& g, const std::vector<std::uint8_t>& removed) {
  const int n = g.node_count();
  require(static_cast<int>(removed.size()) == n, "removal flags size mismatch");
  ComponentLabels out;
  out.comp.assign(n, -1);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    if (removed[s] || out.comp[s] >= 0) continue;
    int id = out.count++;
    int size = 0;
    queue.clear();
    queue.push_back(s);
    out.comp[s] = id;
    while (!queue.empty()) {
      NodeId u = queue.back();
      queue.pop_back();
      ++size;
      for (NodeId w : g.neighbors(u)) {
        if (removed[w] || out.comp[w] >= 0) continue;
        out.comp[w] = id;
        queue.push_back(w);
      }
    }
    out.sizes.push_back(size);
  }
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  ComponentLabels labels = attack_components(g, std::vector<std::uint8_t>(g.node_count(), 0));
  std::vector<std::vector<NodeId>> comps(labels.count);
  for (int i = 0; i < labels.count; ++i) comps[i].reserve(labels.sizes[i]);
  for (NodeId v = 0; v < g.node_count(); ++v) comps[labels.comp[v]].push_back(v);
  return comps;  // members ascending, sets ordered by smallest member
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<NodeId>& keep) {
  std::vector<NodeId> nodes = keep;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (NodeId v : nodes)
    require(v >= 0 && v < g.node_count(), "kept node out of range");
  require(!nodes.empty(), "induced subgraph needs at least one node");

  std::vector<int> rank(g.node_count(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) rank[nodes[k]] = static_cast<int>(k);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u : nodes)
    for (NodeId v : g.neighbors(u))
      if (u < v && rank[v] >= 0) edges.emplace_back(rank[u], rank[v]);

  GraphTags tags;
  tags.planar_hint = g.tags().planar_hint;  // planarity survives induction
  InducedSubgraph out{Graph::from_edges(static_cast<int>(nodes.size()), std::move(edges), tags),
                      std::move(nodes)};
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_tree(const Graph& g) {
  if (g.edge_count() != g.node_count() - 1) return false;
  ComponentLabels labels = attack_components(g, std::vector<std::uint8_t>(g.node_count(), 0));
  return labels.count == 1;
}

NodeId tree_centroid(const Graph& g) {
  require(g.tags().tree || is_tree(g), "centroid requires a tree");
  const int n = g.node_count();
  if (n == 1) return 0;

  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<NodeId> stack{0};
  std::vector<std::uint8_t> seen(n, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    NodeId u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (NodeId w : g.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent[w] = u;
      stack.push_back(w);
    }
  }

  std::vector<int> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];

  NodeId best = -1;
  for (NodeId v = 0; v < n; ++v) {
    int max_part = n - subtree[v];
    for (NodeId w : g.neighbors(v))
      if (w != parent[v]) max_part = std::max(max_part, subtree[w]);
    if (2 * max_part <= n && (best < 0 || v < best)) best = v;
  }
  return best;
}

VertexSplit vertex_split_stats(const Graph& g, const std::vector<std::uint8_t>& removed) {
  const int n = g.node_count();
  require(static_cast<int>(removed.size()) == n, "removal flags size mismatch");
  VertexSplit out;
  out.part_sum_sq.assign(n, 0);
  out.max_part.assign(n, 0);

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), subtree(n, 1);
  std::vector<long long> cut_sum_sq(n, 0);
  std::vector<int> cut_total(n, 0), cut_max(n, 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;  // node, next neighbor idx
  int timer = 0;

  for (NodeId root = 0; root < n; ++root) {
    if (removed[root] || disc[root] >= 0) continue;
    std::vector<NodeId> members;
    stack.clear();
    stack.emplace_back(root, 0);
    disc[root] = low[root] = timer++;
    members.push_back(root);
    while (!stack.empty()) {
      auto& [v, it] = stack.back();
      const auto& nbrs = g.neighbors(v);
      if (it < nbrs.size()) {
        NodeId w = nbrs[it++];
        if (removed[w] || w == parent[v]) continue;
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = timer++;
          members.push_back(w);
          stack.emplace_back(w, 0);
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      } else {
        NodeId v_done = v;
        stack.pop_back();
        NodeId p = parent[v_done];
        if (p >= 0) {
          subtree[p] += subtree[v_done];
          low[p] = std::min(low[p], low[v_done]);
          if (low[v_done] >= disc[p]) {
            // subtree(v_done) detaches when p is removed
            long long s = subtree[v_done];
            cut_sum_sq[p] += s * s;
            cut_total[p] += subtree[v_done];
            cut_max[p] = std::max(cut_max[p], subtree[v_done]);
          }
        }
      }
    }
    const int comp_size = subtree[root];
    for (NodeId v : members) {
      int rest = comp_size - 1 - cut_total[v];
      out.part_sum_sq[v] = cut_sum_sq[v] + static_cast<long long>(rest) * rest;
      out.max_part[v] = std::max(cut_max[v], rest);
    }
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<std::pair<NodeId, NodeId>> edges;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      require(static_cast<bool>(fields >> n >> m), "edge list header must be 'n m'");
      require(n >= 1 && m >= 0, "edge list header out of range");
      std::string rest;
      require(!(fields >> rest), "trailing tokens in edge list header");
      continue;
    }
    long long u, v;
    require(static_cast<bool>(fields >> u >> v), "edge line must be 'u v'");
    std::string rest;
    require(!(fields >> rest), "trailing tokens in edge line");
    require(0 <= u && u < v && v < n, "edge line must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
  }
  require(n >= 1, "edge list has no header");
  require(static_cast<long long>(edges.size()) == m, "edge count differs from header");
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), "cannot write graph file: " + path);
  write_edge_list(g, out);
}

std::vector<std::uint8_t> node_flags(int n, const std::vector<NodeId>& set) {
  std::vector<std::uint8_t> flags(n, 0);
  for (NodeId v : set) {
    require(v >= 0 && v < n, "node index out of range");
    require(!flags[v], "duplicate node in set");
    flags[v] = 1;
  }
  return flags;
}

std::vector<NodeId> flagged_nodes(const std::vector<std::uint8_t>& flags) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < static_cast<int>(flags.size()); ++v)
    if (flags[v]) out.push_back(v);
  return out;
}

}  // namespace inoc
