#pragma once

#include <cstdint>
#include <vector>

#include "inoc/graph.hpp"

namespace inoc {

struct InfectionOutcome {
  std::vector<NodeId> starts;
  std::vector<NodeId> infected;  // sorted
  std::vector<NodeId> secure;    // sorted
};

// Threshold 1: the start's whole attack-graph component (empty if the start is
// secure). Threshold 2: starts seed the infection if insecure; afterwards an
// insecure node ignites once two or more of its neighbors are infected.
// |starts| must equal the threshold and starts must be distinct.
InfectionOutcome spread(const Graph& g, const std::vector<NodeId>& secure,
                        const std::vector<NodeId>& starts, int threshold);

struct ExactProbability {
  std::uint64_t favorable = 0;
  std::uint64_t total = 0;
  double value() const { return static_cast<double>(favorable) / static_cast<double>(total); }
};

// Probability that i gets infected when the start (threshold 1) or start pair
// (threshold 2) is drawn uniformly over all nodes / unordered node pairs.
// Secure nodes may be drawn; they simply fail to ignite.
ExactProbability infection_probability_exact(const Graph& g, const std::vector<NodeId>& secure,
                                             NodeId i, int threshold);

}  // namespace inoc
