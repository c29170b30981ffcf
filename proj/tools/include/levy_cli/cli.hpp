#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace levy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kUsage = 2,
  kOutOfRange = 3,
  kInsufficientInput = 4,
};

/// Runs the levy command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levy::cli
