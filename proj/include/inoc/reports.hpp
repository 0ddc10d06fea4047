#pragma once

#include <string>
#include <vector>

#include "inoc/contagion.hpp"
#include "inoc/equilibria.hpp"
#include "inoc/game.hpp"
#include "inoc/generators.hpp"
#include "inoc/optimum.hpp"

namespace inoc {

// JSON emission for every report the CLI prints. Key order is alphabetical
// (library default), so reruns are byte-identical.
std::string to_json(const CostReport& report);
std::string to_json(const InfectionOutcome& outcome);
std::string to_json(const EquilibriumReport& report);
std::string to_json(const DynamicsResult& result);
std::string to_json(const WorstNashResult& result);
std::string to_json(const StarFractional& result);
std::string to_json(const OptimumResult& result, const std::string& method);
std::string to_json(const PoaReport& report);
std::string to_json(const DismantlingReport& report);
std::string sidecar_json(const GeneratedGraph& gg);

// Profile file format: a JSON array of n numbers in [0,1].
StrategyProfile read_profile_json(const std::string& path, int n);
void write_profile_json(const StrategyProfile& profile, const std::string& path);

}  // namespace inoc
