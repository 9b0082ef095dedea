#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coorbit2d {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitNegative = 3,
  kExitNumeric = 4,
};

/// Runs one CLI invocation; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coorbit2d
