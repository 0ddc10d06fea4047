#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "inoc/graph.hpp"

namespace inoc {

struct PowerLawFit {
  double exponent = 0.0;
  double r_squared = 0.0;
};

// Least-squares slope in log-log space. Needs >= 3 strictly positive points.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

// Fixed formatting contract for CSV payloads: 12 significant digits,
// round-half-even (the printf "%.12g" conversion).
std::string format_g12(double value);

struct ScenarioRow {
  std::string family;
  int n = 0;
  int delta = 0;
  std::string C, L;  // decimal cost strings
  int threshold = 1;
  double opt_cost = 0.0;
  std::string opt_provenance;
  double ne_cost = 0.0;
  std::string ne_provenance;
  double poa = 0.0;
  std::uint64_t seed = 0;
  std::string error;  // empty on success
};

struct ScenarioResult {
  std::string name;
  std::vector<ScenarioRow> rows;
  std::vector<std::string> footers;  // e.g. fitted slopes, as comment lines
  std::string csv;                   // the full emitted file
};

std::vector<std::string> scenario_names();

// Runs one named scenario grid. Rows are computed concurrently but emitted in
// grid order; with `reproducible` set the volatile timestamp header line is
// suppressed and reruns are byte-identical.
ScenarioResult run_scenario(const std::string& name, std::uint64_t seed, bool reproducible);

// Log-log scatter of (n, poa) grouped by (family, delta), self-contained SVG.
std::string scenario_svg(const ScenarioResult& result);

}  // namespace inoc
