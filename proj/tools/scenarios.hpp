#pragma once

// Named verification scenarios shared by `clusterweave verify` and the
// acceptance binary. Each scenario carries its own pinned time limit.

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cw::scenarios {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Scenario {
  int number = 0;
  std::string name;
  double limit_seconds = 0;
  std::function<Outcome()> run;
};

struct Report {
  int number = 0;
  std::string name;
  bool ok = false;          // check passed and finished within the limit
  bool within_limit = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
  std::string line() const;  // "PASS  2 a2-pentagon ... [0.001 s / 0.1 s]"
};

const std::vector<Scenario>& all();
std::optional<Scenario> find(const std::string& name);
// Runs a scenario, timing it and turning domain errors into failures.
Report run(const Scenario& s);

}  // namespace cw::scenarios
