#pragma once

#include <string>
#include <vector>

namespace tonegroup {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the exhaustive invariant suite: enumeration laws, operator
/// relations, the classification tables and the chord graph.
std::vector<CheckResult> run_verification();

/// "name: detail PASS" / "name: detail FAIL".
std::string to_string(const CheckResult& result);

}  // namespace tonegroup
