#pragma once

#include <string>
#include <vector>

#include "gq42/workspace.hpp"

namespace gq42 {

struct CheckResult {
  std::string id;      // a1 .. a16
  std::string alias;   // topical name accepted by the CLI
  std::string title;
  bool passed{false};
  std::string detail;  // counts found, or the first failure
};

struct CheckInfo {
  std::string id;
  std::string alias;
  std::string title;
};

/// The fixed list of verification checks, in order.
const std::vector<CheckInfo>& check_registry();

/// Runs one check by id or alias; throws std::invalid_argument for unknown
/// names. The cross-form check builds its own second workspace.
CheckResult run_check(Workspace& ws, const std::string& name);

std::vector<CheckResult> run_all_checks(Workspace& ws);

}  // namespace gq42
