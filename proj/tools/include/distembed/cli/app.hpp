#pragma once

#include <iosfwd>

namespace distembed::cli {

/// Exit codes of the distembed tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitExperimentFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Parses argv and runs one subcommand. Scalars and verdicts go to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace distembed::cli
