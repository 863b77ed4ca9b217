#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace transversal::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kNumerical = 2,
  kViolation = 3,
};

/// Runs the command line `args` (without the program name). Reports and
/// tables go to the files named by flags; summaries go to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace transversal::cli
