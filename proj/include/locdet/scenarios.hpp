#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "locdet/report.hpp"

namespace locdet {

/// A named topology plus everything needed to interpret it: node labels
/// (testbed-style names where applicable) and the hole outline for plots.
struct ScenarioFixture {
  std::string name;
  NetworkGraph net;
  std::vector<std::string> labels;  // empty = numeric ids
  std::optional<HoleSpec> hole;
  int denominator_s = -1;  // configured S for L when nodes were removed
};

std::vector<std::string> scenario_names();

/// Builds the fixture; generated scenarios (sparse4, hole_*) honor `seed`,
/// hand-laid ones ignore it. Throws on an unknown name.
ScenarioFixture make_scenario(const std::string& name, std::uint64_t seed = 1);

struct ScenarioReport {
  ScenarioFixture fixture;
  LocalizabilitySet oracle;
  std::vector<std::string> protocols;        // protocols actually run
  std::vector<RunReport> reports;            // parallel to `protocols`
  std::vector<RunTrace> traces;              // parallel to `protocols`
  bool all_sound = true;
};

/// Runs every applicable protocol on the fixture (ITE only at small scale),
/// computes the oracle set, and checks protocol soundness against it.
ScenarioReport run_scenario(const std::string& name, std::uint64_t seed = 1,
                            bool with_oracle = true);

}  // namespace locdet
