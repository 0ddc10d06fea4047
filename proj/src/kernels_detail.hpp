#pragma once

// Per-item logic shared by the serial reference kernels and their OpenMP
// counterparts. Everything here is deterministic given its inputs; the two
// kernel families differ only in how items are scheduled and merged.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "inoc/game.hpp"
#include "inoc/graph.hpp"
#include "inoc/kernels.hpp"
#include "inoc/rational.hpp"
#include "inoc/rng.hpp"

namespace inoc::kernels::detail {

struct SpreadScratch {
  std::vector<std::uint8_t> infected;
  std::vector<int> hot_neighbors;
  std::vector<NodeId> queue;
  std::vector<NodeId> touched;

  explicit SpreadScratch(int n) : infected(n, 0), hot_neighbors(n, 0), queue(), touched() {
    queue.reserve(n);
    touched.reserve(n);
  }

  void reset() {
    for (NodeId v : touched) {
      infected[v] = 0;
      hot_neighbors[v] = 0;
    }
    touched.clear();
    queue.clear();
  }
};

// Bootstrap fixpoint for threshold >= 2: insecure starts are infected
// unconditionally, every other insecure node ignites at `threshold` infected
// neighbors. Returns |infected|. If stop_at >= 0, returns early (with a
// partial count) as soon as that node ignites; the caller only reads the
// infection flag of stop_at in that case.
inline int bootstrap_spread(const Graph& g, const std::vector<std::uint8_t>& secure,
                            const NodeId* starts, int start_count, int threshold,
                            SpreadScratch& scratch, NodeId stop_at = -1) {
  scratch.reset();
  int count = 0;
  for (int s = 0; s < start_count; ++s) {
    NodeId v = starts[s];
    if (secure[v] || scratch.infected[v]) continue;
    scratch.infected[v] = 1;
    scratch.touched.push_back(v);
    scratch.queue.push_back(v);
    ++count;
    if (v == stop_at) return count;
  }
  std::size_t head = 0;
  while (head < scratch.queue.size()) {
    NodeId u = scratch.queue[head++];
    for (NodeId w : g.neighbors(u)) {
      if (secure[w] || scratch.infected[w]) continue;
      if (scratch.hot_neighbors[w] == 0) scratch.touched.push_back(w);
      if (++scratch.hot_neighbors[w] >= threshold) {
        scratch.infected[w] = 1;
        scratch.queue.push_back(w);
        ++count;
        if (w == stop_at) return count;
      }
    }
  }
  return count;
}

// Size of i's component in g minus removed; i itself must not be removed.
inline int component_size_of(const Graph& g, const std::vector<std::uint8_t>& removed, NodeId i,
                             SpreadScratch& scratch) {
  scratch.reset();
  scratch.infected[i] = 1;
  scratch.touched.push_back(i);
  scratch.queue.push_back(i);
  int size = 0;
  std::size_t head = 0;
  while (head < scratch.queue.size()) {
    NodeId u = scratch.queue[head++];
    ++size;
    for (NodeId w : g.neighbors(u)) {
      if (removed[w] || scratch.infected[w]) continue;
      scratch.infected[w] = 1;
      scratch.touched.push_back(w);
      scratch.queue.push_back(w);
    }
  }
  return size;
}

// Nodes with 0 < a_j < 1, j != skip. Nodes with a_j == 1 are pre-set in the
// base flags; the conditioned node `skip` stays insecure.
struct EnumerationPlan {
  std::vector<NodeId> undetermined;
  std::vector<std::uint8_t> base_flags;
};

inline EnumerationPlan make_enumeration_plan(const StrategyProfile& profile, NodeId skip) {
  EnumerationPlan plan;
  const int n = profile.size();
  plan.base_flags.assign(n, 0);
  for (NodeId j = 0; j < n; ++j) {
    if (j == skip) continue;
    if (profile.a[j] >= 1.0)
      plan.base_flags[j] = 1;
    else if (profile.a[j] > 0.0)
      plan.undetermined.push_back(j);
  }
  return plan;
}

// One seeded draw of the inoculation flags on top of the plan's base flags.
// Draw order is the ascending undetermined list; a fixed (seed, k) therefore
// yields the same flags in every execution.
inline void draw_flags(const EnumerationPlan& plan, const StrategyProfile& profile,
                       std::uint64_t seed, std::uint64_t k, std::vector<std::uint8_t>& flags) {
  flags = plan.base_flags;
  CounterRng rng = CounterRng::for_sample(seed, k);
  for (NodeId j : plan.undetermined)
    if (rng.next_unit() < profile.a[j]) flags[j] = 1;
}

// Pair index -> lexicographic (a, b), a < b.
struct PairIndexer {
  int n;
  explicit PairIndexer(int node_count) : n(node_count) {}
  std::uint64_t count() const { return static_cast<std::uint64_t>(n) * (n - 1) / 2; }
  std::pair<NodeId, NodeId> decode(std::uint64_t p) const {
    // row a holds n-1-a pairs
    NodeId a = 0;
    std::uint64_t remaining = p;
    while (remaining >= static_cast<std::uint64_t>(n - 1 - a)) {
      remaining -= n - 1 - a;
      ++a;
    }
    return {a, static_cast<NodeId>(a + 1 + remaining)};
  }
};

// --- pure-profile equilibrium checks ----------------------------------------

// S(v) for a pure profile: component size for insecure v; for secure v, one
// plus the sizes of the distinct attack components adjacent to v.
inline long long pure_profile_s(const Graph& g, const ComponentLabels& labels,
                                const std::vector<std::uint8_t>& secure, NodeId v,
                                std::vector<int>& seen_comp, int& stamp) {
  if (!secure[v]) return labels.sizes[labels.comp[v]];
  ++stamp;
  long long s = 1;
  for (NodeId w : g.neighbors(v)) {
    int c = labels.comp[w];
    if (c < 0 || seen_comp[c] == stamp) continue;
    seen_comp[c] = stamp;
    s += labels.sizes[c];
  }
  return s;
}

inline std::vector<std::uint8_t> mask_flags(std::uint32_t mask, int n) {
  std::vector<std::uint8_t> flags(n, 0);
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) flags[v] = 1;
  return flags;
}

// a-vector lexicographic order on secure masks.
inline bool profile_lex_less(std::uint32_t a, std::uint32_t b, int n) {
  for (int v = 0; v < n; ++v) {
    unsigned bit_a = (a >> v) & 1u;
    unsigned bit_b = (b >> v) & 1u;
    if (bit_a != bit_b) return bit_a < bit_b;
  }
  return false;
}

// Sorted-node-list lexicographic order on secure sets (used for optimum ties).
inline bool set_lex_less(std::uint32_t a, std::uint32_t b, int n) {
  for (int v = 0; v < n; ++v) {
    unsigned in_a = (a >> v) & 1u;
    unsigned in_b = (b >> v) & 1u;
    if (in_a != in_b) return in_a > in_b;  // containing the smaller node first
  }
  return false;
}

// --- allocation-free mask scans (n <= 25) ------------------------------------

struct MaskScanScratch {
  std::vector<int> comp;     // comp id per node, -1 = secure
  std::vector<int> sizes;    // per comp id
  std::vector<int> seen;     // stamp marks for adjacent-component dedup
  std::vector<NodeId> queue;
  int stamp = 0;
  explicit MaskScanScratch(int n) : comp(n), sizes(n), seen(n, 0), queue() { queue.reserve(n); }
};

struct MaskComponents {
  int count = 0;
  long long sum_sq = 0;
};

inline MaskComponents mask_components(const Graph& g, std::uint32_t mask, MaskScanScratch& s) {
  const int n = g.node_count();
  MaskComponents out;
  for (int v = 0; v < n; ++v) s.comp[v] = (mask >> v) & 1u ? -1 : -2;  // -2 = unvisited
  for (int v = 0; v < n; ++v) {
    if (s.comp[v] != -2) continue;
    int id = out.count++;
    int size = 0;
    s.queue.clear();
    s.queue.push_back(v);
    s.comp[v] = id;
    std::size_t head = 0;
    while (head < s.queue.size()) {
      NodeId u = s.queue[head++];
      ++size;
      for (NodeId w : g.neighbors(u)) {
        if (s.comp[w] != -2) continue;
        s.comp[w] = id;
        s.queue.push_back(w);
      }
    }
    s.sizes[id] = size;
    out.sum_sq += static_cast<long long>(size) * size;
  }
  return out;
}

// S(v) against the labels computed by mask_components.
inline long long mask_profile_s(const Graph& g, std::uint32_t mask, MaskScanScratch& s, NodeId v) {
  if (!((mask >> v) & 1u)) return s.sizes[s.comp[v]];
  ++s.stamp;
  long long value = 1;
  for (NodeId w : g.neighbors(v)) {
    int c = s.comp[w];
    if (c < 0 || s.seen[c] == s.stamp) continue;
    s.seen[c] = s.stamp;
    value += s.sizes[c];
  }
  return value;
}

// One joint sample: inoculation flags for every node (ascending order), then
// the start draw(s). Returns X = |secure|, Y = |infected| and leaves the
// infected nodes in scratch.queue.
inline void one_cost_sample(const Graph& g, const GameConfig& cfg, const StrategyProfile& profile,
                            std::uint64_t seed, std::uint64_t k, SpreadScratch& scratch,
                            std::vector<std::uint8_t>& flags, int& x, int& y) {
  const int n = g.node_count();
  CounterRng rng = CounterRng::for_sample(seed, k);
  x = 0;
  for (NodeId j = 0; j < n; ++j) {
    flags[j] = rng.next_unit() < profile.a[j] ? 1 : 0;
    x += flags[j];
  }
  if (cfg.threshold == 1) {
    NodeId start = static_cast<NodeId>(rng.next_below(n));
    y = bootstrap_spread(g, flags, &start, 1, 1, scratch);
  } else {
    PairIndexer pairs(n);
    auto [a, b] = pairs.decode(rng.next_below(pairs.count()));
    NodeId starts[2] = {a, b};
    y = bootstrap_spread(g, flags, starts, 2, 2, scratch);
  }
}

// Bernoulli draw of "i infected" with i held insecure.
inline std::uint64_t one_indicator_sample(const Graph& g, const GameConfig& cfg,
                                          const EnumerationPlan& plan,
                                          const StrategyProfile& profile, NodeId i,
                                          std::uint64_t seed, std::uint64_t k,
                                          SpreadScratch& scratch,
                                          std::vector<std::uint8_t>& flags) {
  const int n = g.node_count();
  flags = plan.base_flags;
  CounterRng rng = CounterRng::for_sample(seed, k);
  for (NodeId j : plan.undetermined)
    if (rng.next_unit() < profile.a[j]) flags[j] = 1;
  if (cfg.threshold == 1) {
    NodeId start = static_cast<NodeId>(rng.next_below(n));
    component_size_of(g, flags, i, scratch);
    return scratch.infected[start] ? 1 : 0;
  }
  PairIndexer pairs(n);
  auto [a, b] = pairs.decode(rng.next_below(pairs.count()));
  NodeId starts[2] = {a, b};
  bootstrap_spread(g, flags, starts, 2, 2, scratch, i);
  return scratch.infected[i] ? 1 : 0;
}

}  // namespace inoc::kernels::detail

namespace inoc::kernels::detail_scan {

inline double mask_cost_threshold1(const Graph& g, const GameConfig& cfg, std::uint32_t mask,
                                   detail::MaskScanScratch& scratch) {
  auto comps = detail::mask_components(g, mask, scratch);
  return cfg.c() * std::popcount(mask) +
         cfg.l() * static_cast<double>(comps.sum_sq) / g.node_count();
}

inline bool better_min(const SubsetScanResult& cand, const SubsetScanResult& best, int n) {
  if (!best.found) return true;
  if (cand.cost != best.cost) return cand.cost < best.cost;
  int pc = std::popcount(cand.mask), pb = std::popcount(best.mask);
  if (pc != pb) return pc < pb;
  return detail::set_lex_less(cand.mask, best.mask, n);
}

inline bool better_max(const SubsetScanResult& cand, const SubsetScanResult& best, int n) {
  if (!best.found) return true;
  if (cand.cost != best.cost) return cand.cost > best.cost;
  return detail::profile_lex_less(cand.mask, best.mask, n);
}

}  // namespace inoc::kernels::detail_scan
