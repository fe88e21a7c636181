#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyp::cli {

/// Exit codes of the command-line contract.
enum ExitCode : int { kOk = 0, kValidation = 1, kSizeGuard = 2, kVerifyFailed = 3 };

/// Runs one invocation; args excludes the program name. Results go to out,
/// a JSON error object to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyp::cli
