#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlcrange {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,  ///< bad flags, bad config, invalid geometry
  kExitRuntime = 2,     ///< failure while computing or writing output
};

/// Runs the `vlcrange` command line. `args` excludes the program name.
/// Results go to `out` (or the --out file); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vlcrange
