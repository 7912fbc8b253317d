#pragma once

#include <string>
#include <vector>

namespace polyadic {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

/// Regression checks of the stored fixtures against the values printed
/// alongside the published tables. Each check catches its own exceptions.
std::vector<CheckResult> run_paper_checks(unsigned threads = 1);

}  // namespace polyadic
