#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pht/error.hpp"

namespace pht::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kSymmetryFailure = 3,
};

/// Library errors caused by the input itself map to kInputError; errors that
/// report a broken or absent symmetry (or metric) map to kSymmetryFailure.
int exit_code_for(ErrorCode code) noexcept;

/// Runs the `pht` command line. `args` includes the program name. JSON and
/// CSV go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pht::cli
