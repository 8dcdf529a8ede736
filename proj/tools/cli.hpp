#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbscroll::cli {

/// Exit codes: 0 ok, 1 unexpected fault, 2 invalid input, 3 verification
/// failure.
enum ExitCode : int { kOk = 0, kFault = 1, kInvalidInput = 2, kVerifyFailed = 3 };

/// Runs the tool on `args` (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilbscroll::cli
