#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubext {

enum ExitCode {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitSolverFailure = 2,
    kExitInfeasible = 3,
    kExitInputError = 4,
};

/// args[0] is the program name. JSON results go to `out`, progress notes to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubext
