#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lagsurf::cli {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the command line `lagsurf <args...>` (args exclude the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lagsurf::cli
