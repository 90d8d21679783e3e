#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logicmine {

// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_format = 2,
  exit_no_model = 3,
};

// Runs the tool on `args` (args[0] is the program name). Results go to `out`
// unless `-o` names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace logicmine
