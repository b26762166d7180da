#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyprec::cli {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kValidation = 2,
  kNumerical = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyprec::cli
