#pragma once

#include <string>
#include <vector>

namespace magari4::cli {

enum ExitCode : int {
    kSuccess = 0,
    kNegative = 1,  // not equivalent, not preserved, not representable, ...
    kUsage = 2,
    kInternal = 3,
};

struct CommandOutcome {
    int exit_code = kSuccess;
    std::string payload;  // stdout text, newline-terminated
    std::string errors;   // stderr text
};

/// Runs one command line; `args` excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

/// The formulas of the canned twelve-system used by `selftest`, as a system file.
std::string canned_system_text();

}  // namespace magari4::cli
