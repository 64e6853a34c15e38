#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thicket {

/// Exit codes: 0 success, 1 a check failed, 2 bad input or usage.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

/// Full command-line entry point; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thicket
