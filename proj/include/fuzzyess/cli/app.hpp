#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fuzzyess::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNumericFailure = 3,
};

// Runs one command line. args[0] is the program name. Command output goes to
// `out` (or the --output file) only once the command has fully succeeded;
// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzyess::cli
