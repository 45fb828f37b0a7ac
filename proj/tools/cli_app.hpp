#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gamma4::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 2,
  kInternalFailure = 3,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out`; a single diagnostic line goes to `err` on failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gamma4::cli
