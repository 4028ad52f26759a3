#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spackd::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,            // success, valid, sat
  kExitNegative = 1,      // invalid, unsat, selfcheck failure
  kExitUsage = 2,         // bad flags, unsupported or malformed input
  kExitInconclusive = 3,  // timeout
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// notices and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spackd::cli
