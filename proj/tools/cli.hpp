#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenstorsion::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kConvergenceWarning = 3,
};

/// Runs the command line front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lenstorsion::cli
