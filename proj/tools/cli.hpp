#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pathforge::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kLimit = 3,
  kIo = 4,
  kInternal = 5,
};

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pathforge::cli
