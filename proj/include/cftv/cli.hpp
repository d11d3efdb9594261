#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cftv {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitConfigError = 2 };

/// Runs the command line `args` (without the program name).  Reports and CSV
/// go to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cftv
