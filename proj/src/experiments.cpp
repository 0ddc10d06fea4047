#include "inoc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "inoc/equilibria.hpp"
#include "inoc/errors.hpp"
#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/optimum.hpp"
#include "inoc/rng.hpp"

namespace inoc {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
  require(points.size() >= 3, "power-law fit needs at least 3 points");
  std::vector<double> xs, ys;
  for (auto [x, y] : points) {
    require(x > 0.0 && y > 0.0, "power-law fit needs positive values");
    xs.push_back(std::log(x));
    ys.push_back(std::log(y));
  }
  const double k = static_cast<double>(points.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  require(sxx > 0.0, "power-law fit needs at least two distinct x values");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  const double intercept = my - fit.exponent * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double predicted = intercept + fit.exponent * xs[i];
    ss_res += (ys[i] - predicted) * (ys[i] - predicted);
    ss_tot += (ys[i] - my) * (ys[i] - my);
  }
  fit.r_squared = ss_tot == 0.0 ? (ss_res == 0.0 ? 1.0 : 0.0) : 1.0 - ss_res / ss_tot;
  return fit;
}

std::string format_g12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

namespace {

struct GridPoint {
  std::string family;
  int n = 0;
  int delta = 0;
  std::string C = "1", L = "1";
  int threshold = 1;
  std::uint64_t seed = 0;
};

using PointRunner = ScenarioRow (*)(const GridPoint&);

ScenarioRow base_row(const GridPoint& pt) {
  ScenarioRow row;
  row.family = pt.family;
  row.n = pt.n;
  row.delta = pt.delta;
  row.C = pt.C;
  row.L = pt.L;
  row.threshold = pt.threshold;
  row.seed = pt.seed;
  return row;
}

// Certifies the all-zero profile as an equilibrium and prices it exactly.
double certified_all_zero_ne_cost(const Graph& g, const GameConfig& cfg) {
  auto report = is_nash(g, cfg, StrategyProfile::zeros(g.node_count()), 0.0, EvalMode::exact);
  require(report.is_nash, "all-zero profile is not an equilibrium here");
  return cost_pure(g, cfg, {}).total;
}

ScenarioRow run_star_poa_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  auto g = generate({.family = Family::star, .n = pt.n});
  row.delta = max_degree(g.graph);
  row.opt_cost = brute_force_optimum(g.graph, cfg).cost;
  row.opt_provenance = "exhaustive";
  row.ne_cost = worst_pure_nash(g.graph, cfg).cost;
  row.ne_provenance = "exhaustive";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_delta_scaling_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  auto g = make_subdivided_regular(pt.n, pt.delta);
  row.ne_cost = certified_all_zero_ne_cost(g.graph, cfg);
  row.ne_provenance = "analytic_bound";
  row.opt_cost = cost_pure(g.graph, cfg, subdivision_strategy(g)).total;
  row.opt_provenance = "heuristic_upper_bound";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_tree_bound_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  auto g = generate({.family = Family::random_tree, .n = pt.n, .seed = pt.seed});
  row.delta = max_degree(g.graph);
  row.ne_cost = certified_all_zero_ne_cost(g.graph, cfg);
  row.ne_provenance = "analytic_bound";
  row.opt_cost = cost_pure(g.graph, cfg, tree_separator_strategy(g.graph)).total;
  row.opt_provenance = "heuristic_upper_bound";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_planar_grid_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(pt.n))));
  auto g = generate({.family = Family::grid, .n = side * side, .rows = side, .cols = side});
  row.n = side * side;
  row.delta = max_degree(g.graph);
  row.ne_cost = certified_all_zero_ne_cost(g.graph, cfg);
  row.ne_provenance = "analytic_bound";
  int target = 1;
  while (static_cast<double>(target) < std::cbrt(static_cast<double>(row.n))) target <<= 1;
  auto secure = recursive_separator_strategy(g.graph, grid_separator_oracle(side, side), target);
  row.opt_cost = cost_pure(g.graph, cfg, secure).total;
  row.opt_provenance = "heuristic_upper_bound";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_bistar_threshold2_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, 2);
  row.threshold = 2;
  auto g = generate({.family = Family::bistar, .n = pt.n});
  row.delta = max_degree(g.graph);
  row.ne_cost = certified_all_zero_ne_cost(g.graph, cfg);
  row.ne_provenance = "analytic_bound";
  row.opt_cost = cost_pure(g.graph, cfg, {0, 1}).total;  // secure both centers
  row.opt_provenance = "heuristic_upper_bound";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_random_gnp_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  auto g = generate({.family = Family::gnp,
                     .n = pt.n,
                     .edge_probability = 2.0 / pt.n,
                     .seed = pt.seed});
  row.delta = max_degree(g.graph);
  row.ne_cost = certified_all_zero_ne_cost(g.graph, cfg);
  row.ne_provenance = "analytic_bound";
  row.opt_cost = cost_pure(g.graph, cfg, greedy_optimum(g.graph, cfg)).total;
  row.opt_provenance = "heuristic_upper_bound";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_fractional_star_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  auto g = generate({.family = Family::star, .n = pt.n});
  row.delta = max_degree(g.graph);
  auto ne = star_fractional(pt.n, cfg.C, cfg.L);
  auto profile = ne.profile(pt.n);
  auto check = is_nash(g.graph, cfg, profile, 1e-9, EvalMode::exact);
  require(check.is_nash, "star fractional solution failed certification");
  row.ne_cost = cost_profile(g.graph, cfg, profile, EvalMode::exact).total;
  row.ne_provenance = "fractional_ne";
  row.opt_cost = brute_force_optimum(g.graph, cfg).cost;
  row.opt_provenance = "exhaustive";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

ScenarioRow run_fractional_transitive_point(const GridPoint& pt) {
  ScenarioRow row = base_row(pt);
  GameConfig cfg = GameConfig::from_decimal(pt.C, pt.L, pt.threshold);
  Family family = pt.family == "cycle" ? Family::cycle : Family::complete;
  auto g = generate({.family = family, .n = pt.n});
  row.delta = max_degree(g.graph);
  double p = uniform_fractional(g.graph, cfg, 1e-8, EvalMode::exact);
  auto profile = StrategyProfile::uniform(pt.n, p);
  auto check = is_nash(g.graph, cfg, profile, 1e-6, EvalMode::exact);
  require(check.is_nash, "uniform fractional solution failed certification");
  row.ne_cost = cost_profile(g.graph, cfg, profile, EvalMode::exact).total;
  row.ne_provenance = "fractional_ne";
  row.opt_cost = brute_force_optimum(g.graph, cfg).cost;
  row.opt_provenance = "exhaustive";
  row.poa = row.ne_cost / row.opt_cost;
  return row;
}

struct ScenarioPlan {
  std::string header;  // one comment line describing what the grid probes
  std::vector<GridPoint> points;
  PointRunner runner = nullptr;
  // group key -> label for fitted footers; empty = no fit
  bool fit_by_delta = false;
};

ScenarioPlan make_plan(const std::string& name, std::uint64_t seed) {
  ScenarioPlan plan;
  if (name == "star_poa") {
    plan.header = "# probes: exhaustive star PoA, expected >= n/2";
    for (int n : {8, 12, 16}) plan.points.push_back({"star", n, 0, "1", "1", 1, seed});
    plan.runner = run_star_poa_point;
  } else if (name == "delta_scaling") {
    plan.header = "# probes: PoA lower estimate vs n at fixed max degree, expected ~ sqrt(n)";
    for (int delta : {2, 4})
      for (int n : {256, 1024, 4096})
        plan.points.push_back({"subdivided_regular", n, delta, "1", "1", 1, seed});
    plan.runner = run_delta_scaling_point;
    plan.fit_by_delta = true;
  } else if (name == "tree_bound") {
    plan.header = "# probes: centroid-splitting strategy cost on random trees";
    for (int i = 0; i < 200; ++i) {
      std::uint64_t tree_seed = seed + static_cast<std::uint64_t>(i);
      int n = 4 + static_cast<int>(CounterRng::for_sample(tree_seed, 0).next_below(397));
      plan.points.push_back({"random_tree", n, 0, "1", "1", 1, tree_seed});
    }
    plan.runner = run_tree_bound_point;
  } else if (name == "planar_grid") {
    plan.header = "# probes: recursive separator strategy on square grids";
    for (int n : {64, 144, 256}) plan.points.push_back({"grid", n, 0, "1", "1", 1, seed});
    plan.runner = run_planar_grid_point;
  } else if (name == "bistar_threshold2") {
    plan.header = "# probes: threshold-2 PoA lower bound on the bistar, expected ~ n";
    for (int n : {20, 50, 100}) plan.points.push_back({"bistar", n, 0, "1", "1", 2, seed});
    plan.runner = run_bistar_threshold2_point;
  } else if (name == "random_gnp") {
    plan.header = "# probes: certified-NE over greedy-optimum ratio on G(n, 2/n)";
    for (int n : {100, 200, 400})
      for (int s = 0; s < 20; ++s)
        plan.points.push_back({"gnp", n, 0, "1", "1", 1, seed + static_cast<std::uint64_t>(s)});
    plan.runner = run_random_gnp_point;
  } else if (name == "fractional_star") {
    plan.header = "# probes: interior star equilibrium cost C*n against the exhaustive optimum";
    for (int n : {4, 10, 16}) plan.points.push_back({"star", n, 0, "1", "2", 1, seed});
    plan.runner = run_fractional_star_point;
  } else if (name == "fractional_transitive") {
    plan.header = "# probes: uniform interior equilibria on vertex-transitive graphs";
    plan.points.push_back({"cycle", 12, 0, "0.3", "1", 1, seed});
    plan.points.push_back({"complete", 8, 0, "0.5", "1", 1, seed});
    plan.runner = run_fractional_transitive_point;
  } else {
    throw PreconditionError("unknown scenario: " + name);
  }
  return plan;
}

}  // namespace

std::vector<std::string> scenario_names() {
  return {"star_poa",      "delta_scaling",  "tree_bound",      "planar_grid",
          "bistar_threshold2", "random_gnp", "fractional_star", "fractional_transitive"};
}

ScenarioResult run_scenario(const std::string& name, std::uint64_t seed, bool reproducible) {
  ScenarioPlan plan = make_plan(name, seed);
  ScenarioResult result;
  result.name = name;
  result.rows.resize(plan.points.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < static_cast<long long>(plan.points.size()); ++i) {
    try {
      result.rows[i] = plan.runner(plan.points[i]);
    } catch (const std::exception& err) {
      result.rows[i] = base_row(plan.points[i]);
      result.rows[i].error = err.what();
    }
  }

  if (plan.fit_by_delta) {
    std::map<int, std::vector<std::pair<double, double>>> groups;
    for (const auto& row : result.rows)
      if (row.error.empty()) groups[row.delta].push_back({row.n, row.poa});
    for (const auto& [delta, pts] : groups) {
      if (pts.size() < 3) continue;
      auto fit = fit_power_law(pts);
      result.footers.push_back("# fit delta=" + std::to_string(delta) +
                               ": exponent=" + format_g12(fit.exponent) +
                               " r2=" + format_g12(fit.r_squared));
    }
  }

  std::ostringstream csv;
  csv << "# scenario: " << name << "\n";
  csv << plan.header << "\n";
  if (!reproducible) {
    auto now = std::chrono::system_clock::now().time_since_epoch();
    csv << "# run-at-unix-ms: "
        << std::chrono::duration_cast<std::chrono::milliseconds>(now).count() << "\n";
  }
  csv << "family,n,delta,C,L,threshold,opt_cost,opt_provenance,ne_cost,ne_provenance,poa,seed,"
         "error\n";
  for (const auto& row : result.rows) {
    csv << row.family << ',' << row.n << ',' << row.delta << ',' << row.C << ',' << row.L << ','
        << row.threshold << ',';
    if (row.error.empty())
      csv << format_g12(row.opt_cost) << ',' << row.opt_provenance << ','
          << format_g12(row.ne_cost) << ',' << row.ne_provenance << ',' << format_g12(row.poa);
    else
      csv << ",,,,";
    csv << ',' << row.seed << ',' << row.error << "\n";
  }
  for (const auto& footer : result.footers) csv << footer << "\n";
  result.csv = csv.str();
  return result;
}

std::string scenario_svg(const ScenarioResult& result) {
  // log-log scatter with one polyline per (family, delta) group
  std::vector<std::pair<double, double>> pts;
  std::map<std::string, std::vector<std::pair<double, double>>> groups;
  for (const auto& row : result.rows) {
    if (!row.error.empty() || row.n <= 0 || row.poa <= 0) continue;
    std::string key = row.family + "/" + std::to_string(row.delta);
    groups[key].push_back({std::log10(static_cast<double>(row.n)), std::log10(row.poa)});
    pts.push_back(groups[key].back());
  }
  const int width = 640, height = 480, margin = 56;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!pts.empty()) {
    double xmin = pts[0].first, xmax = xmin, ymin = pts[0].second, ymax = ymin;
    for (auto [x, y] : pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      ymin = std::min(ymin, y);
      ymax = std::max(ymax, y);
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto sx = [&](double x) {
      return margin + (x - xmin) / (xmax - xmin) * (width - 2 * margin);
    };
    auto sy = [&](double y) {
      return height - margin - (y - ymin) / (ymax - ymin) * (height - 2 * margin);
    };
    svg << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << width / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">log10 n</text>\n";
    svg << "<text x=\"16\" y=\"" << height / 2 << "\" transform=\"rotate(-90 16 " << height / 2
        << ")\" text-anchor=\"middle\">log10 poa</text>\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    int color_idx = 0;
    int label_y = margin;
    for (auto& [key, series] : groups) {
      std::sort(series.begin(), series.end());
      const char* color = colors[color_idx++ % 6];
      svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
      for (auto [x, y] : series) svg << sx(x) << ',' << sy(y) << ' ';
      svg << "\"/>\n";
      for (auto [x, y] : series)
        svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << color
            << "\"/>\n";
      svg << "<text x=\"" << width - margin + 4 << "\" y=\"" << label_y << "\" fill=\"" << color
          << "\" font-size=\"11\">" << key << "</text>\n";
      label_y += 14;
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace inoc
