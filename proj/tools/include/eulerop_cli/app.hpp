#pragma once

#include <iosfwd>

namespace eulerop::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kMathError = 3,
};

/// Runs one command line. Documents go to `out` (or --out), diagnostics
/// and progress to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulerop::cli
