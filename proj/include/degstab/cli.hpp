#pragma once

#include <iosfwd>

namespace degstab {

// Exit codes: 0 Yes, 1 No, 2 PreconditionViolated, 3 error, 4 parse error,
// 5 numeric failure, 6 oracle timeout, 64 usage.
enum ExitCode : int {
    kExitYes = 0,
    kExitNo = 1,
    kExitPrecondition = 2,
    kExitError = 3,
    kExitParse = 4,
    kExitNumeric = 5,
    kExitTimeout = 6,
    kExitUsage = 64,
};

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv);

}  // namespace degstab
