#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qtcat/error.hpp"

namespace qtcat::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParseError = 2,
  kPrecondition = 3,
  kResourceLimit = 4,
};

int exit_code_for(ErrorCode code);

/// Runs one invocation; args[0] is the program name. Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtcat::cli
