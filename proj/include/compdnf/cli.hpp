#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compdnf::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kArgumentError = 2,
  kDomainError = 3,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compdnf::cli
