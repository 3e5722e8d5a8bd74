#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tonegroup::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kArity = 3,
};

/// Runs one command line (`args` excludes the program name) and returns the
/// exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tonegroup::cli
