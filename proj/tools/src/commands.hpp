#pragma once

#include <ostream>

namespace symcalc::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kPreconditionError = 3,
  kLawViolation = 4,
};

/// Runs one symcalc invocation; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace symcalc::cli
