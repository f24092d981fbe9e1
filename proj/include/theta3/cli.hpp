#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace theta3 {

/// Process exit codes of the theta3 tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the command line (without the program name) and returns the exit code.
/// Command output goes to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace theta3
