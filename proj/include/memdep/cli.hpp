#pragma once

#include <ostream>

namespace memdep::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kAccept = 0,
  kReject = 1,
  kViolation = 2,  // semantic violation, limit, or failed check
  kInputError = 3,
};

/// Runs the `memdep` command line. Never throws; errors become exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace memdep::cli
