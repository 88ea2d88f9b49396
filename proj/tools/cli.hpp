#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quandlekit::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kParseError = 2,
  kAxiomViolation = 3,
  kUnsupportedPresentation = 4,
  kStructureError = 5,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quandlekit::cli
