#pragma once

#include <ostream>

namespace rauzy::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIndeterminate = 2,
  kPrecondition = 3,
  kLimit = 4,
};

/// Runs the rauzy command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rauzy::cli
