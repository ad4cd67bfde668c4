#pragma once

// Command-line surface: convert, verify, bench, random, somos.
//
// Exit codes: 0 success, 1 internal error, 2 parse/usage/input error,
// 3 timeout, 4 no simple ratrec equation within the iteration bound,
// 5 verification violations found.

#include <iosfwd>
#include <string>
#include <vector>

namespace ratrec {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitTimeout = 3,
  kExitNotFound = 4,
  kExitViolations = 5,
};

/// args excludes the program name. Results go to out, diagnostics to err.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ratrec
