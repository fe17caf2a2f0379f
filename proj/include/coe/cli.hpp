#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coe {

/// Exit codes of the `coe` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,      // domain, resource or internal error
  kExitUsage = 2,      // command line did not parse
  kExitMcFail = 3,     // Monte Carlo verification failed
};

/// Runs the tool on `args` (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coe
