#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace proxim::cli {

/// Process exit statuses.
enum ExitCode : int {
  ok = 0,
  usage_error = 2,
  io_error = 3,
  validation_failure = 4,
  bound_violation = 5,
};

/// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace proxim::cli
