#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boxnet::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
};

/// Runs one `boxnet` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxnet::cli
