#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tmzv::cli {

enum ExitCode : int {
  ok = 0,
  verification_failed = 1,
  usage_error = 2,
};

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tmzv::cli
