#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "inoc/graph.hpp"

namespace inoc {

enum class Family {
  star,
  cycle,
  complete,
  grid,
  bistar,
  subdivided_regular,
  gnp,
  random_tree,
};

Family family_from_string(const std::string& name);
std::string family_name(Family family);

struct FamilySpec {
  Family family = Family::star;
  int n = 0;
  int rows = 0;           // grid
  int cols = 0;           // grid
  int degree = 0;         // subdivided_regular
  double edge_probability = 0.0;  // gnp
  std::uint64_t seed = 0;         // random families
};

struct GeneratedGraph {
  Graph graph;
  Family family = Family::star;
  std::vector<NodeId> branch_nodes;  // subdivided_regular only
  int base_nodes = 0;                // subdivided_regular: m
  int rows = 0, cols = 0;            // grid only
};

// Deterministic for a fixed spec; random families are deterministic given the
// seed. Star roots at node 0; bistar is K_{2,n-2} on centers {0,1} plus the
// edge (0,1).
GeneratedGraph generate(const FamilySpec& spec);

// Delta-regular base graph on m nodes (m nearest feasible integer to
// 2*sqrt(n/delta)), every base edge replaced by a path; internal path nodes
// are spread as evenly as possible so the total count is exactly n. Returns
// the m branch nodes as ids 0..m-1.
GeneratedGraph make_subdivided_regular(int n, int degree, std::uint64_t seed = 0);

}  // namespace inoc
