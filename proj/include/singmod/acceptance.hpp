#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace singmod {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double budgetSeconds = 0;  // 0 means no time limit
};

// Loads printed_expansions.json from dir.
nlohmann::json loadGolden(const std::string& dir);

int acceptanceCount();
std::string acceptanceTitle(int id);

// Runs criterion id (1-based). A criterion passes only when every check holds
// and the wall time stays within its budget.
CriterionResult runCriterion(int id, const nlohmann::json& golden);

// Runs the listed criteria (all when empty) in order.
std::vector<CriterionResult> runAcceptance(const nlohmann::json& golden, const std::vector<int>& ids = {},
                                           const std::function<void(const CriterionResult&)>& onResult = {});

}  // namespace singmod
