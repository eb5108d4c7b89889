#pragma once

namespace samf::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUnreadable = 2,
  kDimensionMismatch = 3,
  kBadConfig = 4,
  kNoPairs = 5,
};

/// Maps the exception currently being handled to an exit code.
int exit_code_for_current_exception();

}  // namespace samf::cli
