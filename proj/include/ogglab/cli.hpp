#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ogglab {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitObstruction = 2,
    kExitUnknown = 3,
    kExitBadInput = 4,
    kExitMissingCache = 5,
    kExitVerifyFailed = 6,
    kExitBudget = 7,
};

/// Runs one command; args excludes the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ogglab
