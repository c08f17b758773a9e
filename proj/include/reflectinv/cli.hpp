#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reflectinv/error.hpp"

namespace reflectinv {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitInput = 2, kExitMath = 3 };

/// Input errors map to 2, mathematical violations and non-termination to 3.
int exit_code_for(ErrorKind kind) noexcept;

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflectinv
