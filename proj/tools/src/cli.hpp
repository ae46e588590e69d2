#pragma once

#include <istream>
#include <string>
#include <vector>

namespace advlogic::cli {

enum ExitCode : int {
  kOk = 0,
  kRefuted = 1,
  kUsage = 2,
  kInconclusive = 3,
};

struct CommandResult {
  int exit_code = kOk;
  std::string report;
};

// args[0] is the program name. Files named "-" are read from `in`.
CommandResult run(const std::vector<std::string>& args, std::istream& in);
CommandResult run(const std::vector<std::string>& args);

// Theorem budget default, overridable through ADVLOGIC_BUDGET.
inline constexpr const char* kBudgetEnv = "ADVLOGIC_BUDGET";

}  // namespace advlogic::cli
