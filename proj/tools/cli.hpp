#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsc {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitPrecondition = 2,
  kExitVerification = 3,
};

// Runs one subcommand. args excludes the program name. A payload flag given as "-"
// is read from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qsc
