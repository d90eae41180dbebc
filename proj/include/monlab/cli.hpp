#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monlab {

// Exit codes of the command-line frontend.
enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitInput = 2,
  kExitInternal = 3,
};

// Runs one command. args excludes the program name. Never throws; every
// failure becomes a message on err and an exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monlab
