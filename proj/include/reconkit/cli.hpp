#pragma once

#include <ostream>

namespace reconkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitNotReconstructible = 4,
};

/// Entry point of the `reconkit` tool; JSON goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reconkit
