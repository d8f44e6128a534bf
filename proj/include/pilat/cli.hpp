#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pilat {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  // a verification ran and its answer is "no"
    kExitUsage = 2,        // bad flags, malformed input, cap exceeded
};

/// Runs the tool on `args` (program name excluded). Output goes to `out` unless --output names
/// a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pilat
