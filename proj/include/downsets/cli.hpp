#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace downsets::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,    // parse errors, budgets, bad arguments
  kCheckFailed = 2,    // an identity or duality check came out false
};

/// Runs one CLI invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace downsets::cli
