#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace efglat::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kNegativeVerdict = 2,
  kInternalViolation = 3,
};

// Runs one command line. args excludes the program name. "-" as an input
// file reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace efglat::cli
