#pragma once

#include <string>
#include <vector>

namespace glab {

struct ScenarioInfo {
  std::string id;
  std::string title;
};

/// Outcome of one catalog scenario: assertion lines in catalog order, with
/// execution stopping at the first failed expectation.
struct ScenarioResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::vector<std::string> lines;
  std::string text() const;
};

/// Catalog order, deterministic.
std::vector<ScenarioInfo> list_scenarios();

/// Runs one scenario by id; UnknownScenario for ids not in the catalog.
/// Output is byte-identical across runs.
ScenarioResult run_scenario(const std::string& id);

}  // namespace glab
