#pragma once

#include <ostream>

namespace bfrg::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kBoundNotMet = 3,
  kCapacity = 4,
};

/// Runs the bfrg command line. Normal output goes to `out` unless --out names
/// a file; diagnostics and the chosen seed go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bfrg::cli
