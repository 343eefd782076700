#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotgenus::cli {

enum ExitCode : int {
  success = 0,
  invalid_input = 1,
  internal_error = 2,
};

/// Runs the command line `args` (program name excluded). Reports go to
/// `out`, diagnostics to `err`; `-` in place of a code reads it from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace knotgenus::cli
