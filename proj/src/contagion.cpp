#include "inoc/contagion.hpp"

#include <algorithm>

#include "inoc/errors.hpp"
#include "inoc/kernels.hpp"
#include "kernels_detail.hpp"

namespace inoc {

InfectionOutcome spread(const Graph& g, const std::vector<NodeId>& secure,
                        const std::vector<NodeId>& starts, int threshold) {
  require(threshold == 1 || threshold == 2, "threshold must be 1 or 2");
  require(static_cast<int>(starts.size()) == threshold,
          "start count must equal the threshold");
  const int n = g.node_count();
  auto secure_flags = node_flags(n, secure);
  for (NodeId s : starts) require(s >= 0 && s < n, "start node out of range");
  if (threshold == 2) require(starts[0] != starts[1], "start nodes must be distinct");

  kernels::detail::SpreadScratch scratch(n);
  kernels::detail::bootstrap_spread(g, secure_flags, starts.data(),
                                    static_cast<int>(starts.size()), threshold, scratch);
  InfectionOutcome out;
  out.starts = starts;
  out.secure = flagged_nodes(secure_flags);
  out.infected.assign(scratch.queue.begin(), scratch.queue.end());
  std::sort(out.infected.begin(), out.infected.end());
  return out;
}

ExactProbability infection_probability_exact(const Graph& g, const std::vector<NodeId>& secure,
                                             NodeId i, int threshold) {
  require(threshold == 1 || threshold == 2, "threshold must be 1 or 2");
  const int n = g.node_count();
  require(i >= 0 && i < n, "node out of range");
  auto secure_flags = node_flags(n, secure);
  require(!secure_flags[i], "infection probability is for insecure nodes");

  ExactProbability out;
  if (threshold == 1) {
    // any start inside i's attack component infects i
    auto labels = attack_components(g, secure_flags);
    out.favorable = labels.sizes[labels.comp[i]];
    out.total = n;
    return out;
  }
  require(n >= 2, "threshold 2 needs at least two nodes");
  out.favorable = kernels::pair_infection_count_of(g, secure_flags, i);
  out.total = kernels::detail::PairIndexer(n).count();
  return out;
}

}  // namespace inoc
