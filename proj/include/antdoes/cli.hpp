#pragma once

#include <iosfwd>

namespace antdoes {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotVerified = 1, // `verify` on a non-solution, or an internal failure
    kExitUsage = 2,
    kExitCapacity = 3,
};

/// Entry point behind the `antdoes` binary. Primary output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace antdoes
