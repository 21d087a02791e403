#ifndef PALAIS_ACCEPTANCE_HPP
#define PALAIS_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace palais {

/// One verification criterion of the suite.  All tolerances are pinned in
/// code; `margin` is the observed quantity and `threshold` the bound it was
/// held against (see `detail` for the direction).
struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double margin = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Runs the full verification suite (deterministic seeds, desk scale).
std::vector<CriterionResult> run_acceptance_criteria();

std::string acceptance_summary_json(const std::vector<CriterionResult>& results);

}  // namespace palais

#endif  // PALAIS_ACCEPTANCE_HPP
