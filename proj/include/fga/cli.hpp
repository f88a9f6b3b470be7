#pragma once

#include <ostream>

namespace fga {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitParseError = 2,
  kExitInconclusive = 3,
  kExitUnsupported = 4,
};

/// Runs one command; all output goes to `out` and `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fga
