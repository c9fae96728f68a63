#pragma once
// End-to-end verification suite: ten numbered criteria combining the exact
// symbolic identities, the closed-form families, the iterative solver oracle,
// spectral hypotheses, kernel positivity, and time-dependent stability runs.
// Each criterion reports PASS/FAIL with measured values; nothing is tuned to
// force agreement, so a criterion whose stated target disagrees with the
// measured mathematics fails and says why.

#include <string>
#include <vector>

namespace kawalab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string details;

  std::string line() const;  // "PASS  1 name (0.01 s): details"
};

CriterionResult run_criterion(int id);              // 1..10
std::vector<CriterionResult> run_all_criteria();    // in order

}  // namespace kawalab
