#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgforge::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,    // the mathematical answer is "no"
  kInputError = 2,  // unreadable file, bad syntax, bad arguments
  kDegenerate = 3,  // derive wrote a cube that fails condition (A)
};

/// Runs the hgforge command line; args[0] is the program name. All output
/// goes to `out`/`err`, nothing touches the process streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgforge::cli
