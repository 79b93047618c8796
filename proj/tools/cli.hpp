#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpp::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPrecondition = 3,
  kInternal = 4,
};

// Runs the command line `args` (args[0] is the program name). Results go to
// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lpp::cli
