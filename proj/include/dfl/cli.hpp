#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace dfl {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitRefuted = 1,
    kExitUsage = 2,
    kExitNotFound = 3,
};

/// Runs one CLI invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dfl
