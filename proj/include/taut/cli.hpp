#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace taut {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitFindings = 1,
    kExitBadInput = 2,
    kExitInternal = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taut
