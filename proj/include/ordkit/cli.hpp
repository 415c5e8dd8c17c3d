#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordkit {

/// Exit codes of the command line tool.
enum ExitCode : int {
    exit_pass = 0,
    exit_violation = 1,
    exit_usage = 2,
};

/// Runs the `ordkit` command line with `args` (without the program name).
/// Reports go to `out`, diagnostics and timing to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ordkit
