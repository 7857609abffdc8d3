#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uclab::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kCapExceeded = 3,
  kInternal = 4,
  kBandFailed = 5,
};

/// Runs one command line (args excludes the program name). All output goes
/// to `out` / `err`; nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uclab::cli
