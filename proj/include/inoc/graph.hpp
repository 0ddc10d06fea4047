#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace inoc {

using NodeId = int;

// Structural flags asserted by the generator that built the graph. They are
// never inferred after the fact.
struct GraphTags {
  bool vertex_transitive = false;
  bool tree = false;
  bool planar_hint = false;
};

// Immutable undirected simple graph on nodes 0..n-1. Safe to share across
// threads; every query below is a pure function of the structure.
class Graph {
 public:
  Graph() = default;  // empty placeholder; every built graph has n >= 1
  static Graph from_edges(int n, std::vector<std::pair<NodeId, NodeId>> edges,
                          GraphTags tags = {});

  int node_count() const { return n_; }
  int edge_count() const { return m_; }
  int degree(NodeId v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;
  const GraphTags& tags() const { return tags_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<NodeId>> adj_;
  GraphTags tags_;
};

// Maximal connected node sets, each sorted, ordered by smallest member.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

// Components of the attack graph g minus `removed` (removed[v] != 0 drops v).
// Component ids are assigned in order of smallest member; comp[v] == -1 for
// removed nodes.
struct ComponentLabels {
  std::vector<int> comp;
  std::vector<int> sizes;
  int count = 0;
};
ComponentLabels attack_components(const Graph& g, const std::vector<std::uint8_t>& removed);

struct InducedSubgraph {
  Graph graph;
  std::vector<NodeId> original;  // original[k] = parent-graph id of node k
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<NodeId>& keep);

int max_degree(const Graph& g);

// m == n-1 and connected.
bool is_tree(const Graph& g);

// Node whose removal leaves components of size <= floor(n/2); smallest index
// among the (at most two) candidates. Requires a tree.
NodeId tree_centroid(const Graph& g);

// For every surviving node v: statistics of the parts its attack-graph
// component falls into when v itself is also removed. Computed for all nodes
// in one articulation-point pass.
struct VertexSplit {
  std::vector<long long> part_sum_sq;  // sum of squared part sizes
  std::vector<int> max_part;           // largest part size
};
VertexSplit vertex_split_stats(const Graph& g, const std::vector<std::uint8_t>& removed);

// Edge-list file format: first data line "n m", then m lines "u v" with
// 0 <= u < v < n. Blank lines and lines starting with '#' are ignored.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Dense flag vector for a node set; validates range and rejects duplicates.
std::vector<std::uint8_t> node_flags(int n, const std::vector<NodeId>& set);
std::vector<NodeId> flagged_nodes(const std::vector<std::uint8_t>& flags);

}  // namespace inoc
