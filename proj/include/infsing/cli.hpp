#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infsing {

enum ExitCode : int {
    kExitOk = 0,
    kExitInconsistent = 1,
    kExitUnsupported = 2,
    kExitContradiction = 3,
};

/// Runs the command line (args excludes the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace infsing
