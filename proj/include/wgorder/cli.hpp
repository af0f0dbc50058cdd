#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wgorder {

/// Process exit codes of the wgorder tool.
enum ExitCode : int {
  kExitHolds = 0,         // order holds / every theorem trial passed / success
  kExitFails = 1,         // order fails / some trial failed / no majorization
  kExitInconclusive = 2,  // numerical verdict withheld
  kExitConfig = 3,        // malformed, missing or incompatible configuration
  kExitUsage = 4,         // bad command line
  kExitIo = 5,            // output could not be written
  kExitGeneration = 6,    // no admissible configuration could be generated
};

/// Runs the tool on args (without the program name), writing reports to out
/// and diagnostics to err. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wgorder
