#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace efpm::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kFailure = 1,  // parse or validation failure; diagnostics on `err`
  kUsage = 2,    // unknown subcommand or flag; usage text on `err`
};

/// Runs one command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace efpm::cli
