#include "inoc/optimum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "inoc/equilibria.hpp"
#include "inoc/errors.hpp"
#include "inoc/kernels.hpp"
#include "inoc/rng.hpp"

namespace inoc {

OptimumResult brute_force_optimum(const Graph& g, const GameConfig& cfg, int cap) {
  const int n = g.node_count();
  require(n <= cap, "node count exceeds the exhaustive cap");
  require(n <= 25, "exhaustive scan supports at most 25 nodes");
  auto best = kernels::min_cost_secure_subset_parallel(g, cfg);
  OptimumResult out;
  out.cost = best.cost;
  for (NodeId v = 0; v < n; ++v)
    if (best.mask & (1u << v)) out.secure.push_back(v);
  return out;
}

std::vector<NodeId> tree_separator_strategy(const Graph& g) {
  require(g.tags().tree || is_tree(g), "tree separator strategy requires a tree");
  const int n = g.node_count();
  std::vector<std::uint8_t> removed(n, 0);
  std::vector<NodeId> out;

  for (;;) {
    auto labels = attack_components(g, removed);
    // smallest-min-node component with size^2 > n
    NodeId pick_root = -1;
    for (NodeId v = 0; v < n && pick_root < 0; ++v) {
      if (removed[v]) continue;
      long long k = labels.sizes[labels.comp[v]];
      if (k * k > n) pick_root = v;
    }
    if (pick_root < 0) break;
    std::vector<NodeId> members;
    for (NodeId v = pick_root; v < n; ++v)
      if (!removed[v] && labels.comp[v] == labels.comp[pick_root]) members.push_back(v);
    auto sub = induced_subgraph(g, members);
    NodeId centroid = sub.original[tree_centroid(sub.graph)];
    removed[centroid] = 1;
    out.push_back(centroid);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeparatorOracle centroid_separator_oracle() {
  return [](const Graph& g, const std::vector<NodeId>& part) {
    auto sub = induced_subgraph(g, part);
    return std::vector<NodeId>{sub.original[tree_centroid(sub.graph)]};
  };
}

SeparatorOracle grid_separator_oracle(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid oracle needs the grid shape");
  return [rows, cols](const Graph& g, const std::vector<NodeId>& part) {
    require(g.node_count() == rows * cols, "grid oracle shape mismatch");
    int rmin = rows, rmax = -1, cmin = cols, cmax = -1;
    for (NodeId v : part) {
      int r = v / cols, c = v % cols;
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
      cmin = std::min(cmin, c);
      cmax = std::max(cmax, c);
    }
    const int height = rmax - rmin + 1, width = cmax - cmin + 1;
    std::vector<NodeId> sep;
    if (width >= height) {
      int cut = (cmin + cmax) / 2;
      for (NodeId v : part)
        if (v % cols == cut) sep.push_back(v);
    } else {
      int cut = (rmin + rmax) / 2;
      for (NodeId v : part)
        if (v / cols == cut) sep.push_back(v);
    }
    return sep;
  };
}

std::vector<NodeId> recursive_separator_strategy(const Graph& g, const SeparatorOracle& oracle,
                                                 int target_components) {
  require(target_components >= 1, "target component count must be >= 1");
  require((target_components & (target_components - 1)) == 0,
          "target component count must be a power of two");
  require(target_components <= g.node_count(), "target component count exceeds n");
  require(static_cast<bool>(oracle), "separator oracle missing");

  int rounds = 0;
  while ((1 << rounds) < target_components) ++rounds;

  std::vector<std::vector<NodeId>> parts = connected_components(g);
  std::vector<NodeId> removed_all;

  for (int round = 0; round < rounds; ++round) {
    std::vector<std::vector<NodeId>> next;
    for (auto& part : parts) {
      if (part.size() <= 1) {
        next.push_back(std::move(part));
        continue;
      }
      std::vector<NodeId> sep = oracle(g, part);
      std::vector<std::uint8_t> in_part(g.node_count(), 0);
      for (NodeId v : part) in_part[v] = 1;
      require(!sep.empty(), "separator oracle returned an empty separator");
      for (NodeId v : sep) {
        require(v >= 0 && v < g.node_count() && in_part[v],
                "separator oracle returned a node outside the part");
      }
      std::vector<NodeId> rest;
      auto sep_flags = node_flags(g.node_count(), sep);
      for (NodeId v : part)
        if (!sep_flags[v]) rest.push_back(v);
      removed_all.insert(removed_all.end(), sep.begin(), sep.end());
      if (rest.empty()) continue;
      auto sub = induced_subgraph(g, rest);
      for (auto& comp : connected_components(sub.graph)) {
        require(2 * comp.size() <= part.size(),
                "separator oracle left a part larger than half");
        std::vector<NodeId> mapped;
        mapped.reserve(comp.size());
        for (NodeId v : comp) mapped.push_back(sub.original[v]);
        next.push_back(std::move(mapped));
      }
    }
    parts = std::move(next);
  }
  std::sort(removed_all.begin(), removed_all.end());
  return removed_all;
}

std::vector<NodeId> subdivision_strategy(const GeneratedGraph& gg) {
  require(!gg.branch_nodes.empty(), "graph carries no branch-node metadata");
  return gg.branch_nodes;
}

double convexity_cost_bound(int n, double gamma, double components) {
  require(gamma > 0.0 && components > 0.0, "convexity bound needs gamma, components > 0");
  double rest = static_cast<double>(n) - gamma;
  return gamma + rest * rest / (static_cast<double>(n) * components);
}

double convexity_optimal_gamma(int n, int degree) {
  return static_cast<double>(n) / std::sqrt(1.0 + static_cast<double>(degree) * n);
}

double delta_opt_lower_bound(int n, int degree, double C, double L) {
  require(n >= 1, "n must be >= 1");
  require(degree >= 1, "degree must be >= 1");
  require(C > 0.0 && L > 0.0, "costs must be positive");
  double nd = static_cast<double>(n) * degree;
  return std::min(C, L) * (2.0 * std::sqrt(nd + 1.0) - 2.0) / degree;
}

std::vector<NodeId> greedy_optimum(const Graph& g, const GameConfig& cfg) {
  require(cfg.threshold == 1, "greedy optimum supports threshold 1");
  const int n = g.node_count();
  std::vector<std::uint8_t> secure(n, 0);

  // alternate passes: add the node with the largest exact cost decrease,
  // then drop secured nodes that stopped paying off
  auto best_addition = [&](NodeId& best) {
    auto labels = attack_components(g, secure);
    auto split = vertex_split_stats(g, secure);
    best = -1;
    double best_delta = -1e-12;  // strict decrease only
    for (NodeId v = 0; v < n; ++v) {
      if (secure[v]) continue;
      long long k = labels.sizes[labels.comp[v]];
      // securing v: pay C, the component's k^2 becomes the split parts
      double delta = cfg.c() + cfg.l() * static_cast<double>(split.part_sum_sq[v] - k * k) / n;
      if (delta < best_delta) {
        best = v;
        best_delta = delta;
      }
    }
    return best >= 0;
  };

  auto best_drop = [&](NodeId& best) {
    auto labels = attack_components(g, secure);
    best = -1;
    double best_delta = -1e-12;
    std::vector<int> seen(labels.sizes.size(), -1);
    for (NodeId v = 0; v < n; ++v) {
      if (!secure[v]) continue;
      // dropping v merges the adjacent components with v itself
      long long merged = 1, parts_sq = 0;
      for (NodeId w : g.neighbors(v)) {
        int c = labels.comp[w];
        if (c < 0 || seen[c] == v) continue;
        seen[c] = v;
        merged += labels.sizes[c];
        parts_sq += static_cast<long long>(labels.sizes[c]) * labels.sizes[c];
      }
      double delta =
          -cfg.c() + cfg.l() * static_cast<double>(merged * merged - parts_sq) / n;
      if (delta < best_delta) {
        best = v;
        best_delta = delta;
      }
    }
    return best >= 0;
  };

  // every accepted move strictly decreases the cost, so this terminates
  for (int moves = 0; moves < 4 * n + 8; ++moves) {
    NodeId pick;
    if (best_addition(pick)) {
      secure[pick] = 1;
    } else if (best_drop(pick)) {
      secure[pick] = 0;
    } else {
      break;
    }
  }
  return flagged_nodes(secure);
}

DismantlingReport dismantling_probe(const Graph& g, double delta, double eps, int trials,
                                    std::uint64_t seed) {
  require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  require(eps > 0.0 && eps < 1.0, "eps must lie in (0,1)");
  require(trials >= 0, "trials must be nonnegative");
  const int n = g.node_count();
  const int k = static_cast<int>(delta * n);
  const double cutoff = eps * n;

  DismantlingReport report;
  report.removal_size = k;

  auto largest_after = [&](const std::vector<std::uint8_t>& removed) {
    auto labels = attack_components(g, removed);
    int largest = 0;
    for (int size : labels.sizes) largest = std::max(largest, size);
    return largest;
  };

  auto probe = [&](const std::string& label, const std::vector<std::uint8_t>& removed) {
    DismantlingProbeRecord rec;
    rec.label = label;
    rec.largest_component = largest_after(removed);
    rec.holds = static_cast<double>(rec.largest_component) >= cutoff;
    report.probes.push_back(rec);
  };

  if (k == 0) {
    probe("empty", std::vector<std::uint8_t>(n, 0));
  } else {
    // seeded random subsets
    for (int trial = 0; trial < trials; ++trial) {
      CounterRng rng = CounterRng::for_sample(seed, trial);
      std::vector<NodeId> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      for (int j = 0; j < k; ++j)
        std::swap(ids[j], ids[j + rng.next_below(n - j)]);
      std::vector<std::uint8_t> removed(n, 0);
      for (int j = 0; j < k; ++j) removed[ids[j]] = 1;
      probe("random-" + std::to_string(trial), removed);
    }
    // highest-degree nodes
    {
      std::vector<NodeId> ids(n);
      std::iota(ids.begin(), ids.end(), 0);
      std::stable_sort(ids.begin(), ids.end(),
                       [&](NodeId a, NodeId b) { return g.degree(a) > g.degree(b); });
      std::vector<std::uint8_t> removed(n, 0);
      for (int j = 0; j < k; ++j) removed[ids[j]] = 1;
      probe("top-degree", removed);
    }
    // greedy splitter: repeatedly halve the largest surviving component at
    // its most balanced split point
    {
      std::vector<std::uint8_t> removed(n, 0);
      for (int j = 0; j < k; ++j) {
        auto labels = attack_components(g, removed);
        auto split = vertex_split_stats(g, removed);
        int target = 0;
        for (int c = 1; c < labels.count; ++c)
          if (labels.sizes[c] > labels.sizes[target]) target = c;
        NodeId best = -1;
        for (NodeId v = 0; v < n; ++v) {
          if (removed[v] || labels.comp[v] != target) continue;
          if (best < 0 || split.max_part[v] < split.max_part[best]) best = v;
        }
        removed[best] = 1;
      }
      probe("greedy-split", removed);
    }
  }

  report.holds = true;
  report.min_largest_component = n;
  for (const auto& rec : report.probes) {
    report.holds = report.holds && rec.holds;
    report.min_largest_component = std::min(report.min_largest_component, rec.largest_component);
  }
  return report;
}

std::string opt_method_name(OptMethod m) {
  switch (m) {
    case OptMethod::brute: return "brute";
    case OptMethod::tree_sep: return "tree-sep";
    case OptMethod::recursive_sep: return "recursive-sep";
    case OptMethod::subdivision: return "subdivision";
    case OptMethod::greedy: return "greedy";
  }
  return "unknown";
}

std::string ne_method_name(NeMethod m) {
  switch (m) {
    case NeMethod::exhaustive: return "exhaustive";
    case NeMethod::analytic: return "analytic";
  }
  return "unknown";
}

PoaReport price_of_anarchy(const Graph& g, const GameConfig& cfg, const PoaOptions& options) {
  const int n = g.node_count();
  PoaReport report;

  switch (options.opt_method) {
    case OptMethod::brute: {
      report.optimum_cost = brute_force_optimum(g, cfg, options.cap).cost;
      report.opt_provenance = "exhaustive";
      break;
    }
    case OptMethod::tree_sep: {
      report.optimum_cost = cost_pure(g, cfg, tree_separator_strategy(g)).total;
      report.opt_provenance = "heuristic_upper_bound";
      break;
    }
    case OptMethod::recursive_sep: {
      int target = options.target_components;
      if (target == 0) {
        target = 1;
        while (static_cast<long long>(target) * target < n) target <<= 1;
      }
      auto oracle = options.oracle;
      if (!oracle) {
        require(g.tags().tree || is_tree(g),
                "recursive separator needs an oracle for non-tree graphs");
        oracle = centroid_separator_oracle();
      }
      report.optimum_cost =
          cost_pure(g, cfg, recursive_separator_strategy(g, oracle, target)).total;
      report.opt_provenance = "heuristic_upper_bound";
      break;
    }
    case OptMethod::subdivision: {
      require(!options.branch_nodes.empty(), "subdivision method needs branch metadata");
      report.optimum_cost = cost_pure(g, cfg, options.branch_nodes).total;
      report.opt_provenance = "heuristic_upper_bound";
      break;
    }
    case OptMethod::greedy: {
      report.optimum_cost = cost_pure(g, cfg, greedy_optimum(g, cfg)).total;
      report.opt_provenance = "heuristic_upper_bound";
      break;
    }
  }

  switch (options.ne_method) {
    case NeMethod::exhaustive: {
      report.worst_ne_cost = worst_pure_nash(g, cfg, options.cap).cost;
      report.ne_provenance = "exhaustive";
      break;
    }
    case NeMethod::analytic: {
      auto all_zero = StrategyProfile::zeros(n);
      auto check = is_nash(g, cfg, all_zero, 0.0, EvalMode::exact);
      require(check.is_nash, "all-zero profile is not an equilibrium here");
      report.worst_ne_cost = cost_pure(g, cfg, {}).total;
      report.ne_provenance = "analytic_bound";
      break;
    }
  }

  report.poa = report.worst_ne_cost / report.optimum_cost;
  report.poa_is_lower_bound = report.opt_provenance != "exhaustive";

  if (cfg.threshold == 1) {
    double lower = delta_opt_lower_bound(n, std::max(1, max_degree(g)), cfg.c(), cfg.l());
    report.analytic_lower_bound_on_opt = lower;
    report.poa_upper_bound = std::min(cfg.c(), cfg.l()) * n / lower;
  }
  return report;
}

}  // namespace inoc
