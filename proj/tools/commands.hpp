#ifndef SMOOTHBOUND_TOOLS_COMMANDS_HPP
#define SMOOTHBOUND_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace smoothbound::cli {

enum ExitCode {
  kOk = 0,
  kFailedCriteria = 1,
  kUsage = 2,
  kResource = 3,
};

// Runs the command line. argv[0] is the program name. Data goes to `out`,
// diagnostics and timings to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace smoothbound::cli

#endif  // SMOOTHBOUND_TOOLS_COMMANDS_HPP
