#pragma once

#include <string>
#include <vector>

namespace twobridge {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suites on small instances; `deep` widens every range.
std::vector<CheckResult> run_selfcheck(bool deep);

}  // namespace twobridge
