#pragma once

#include <iosfwd>

namespace nhosc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitIo = 1,
    kExitUsage = 2,
    kExitUndefined = 3,
    kExitVerifyFailed = 4,
};

/// Entry point of the `nhosc` tool; writes data to `out` and diagnostics to
/// `err`. Data written to a file via --output bypasses `out`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nhosc
