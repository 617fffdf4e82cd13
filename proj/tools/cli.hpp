#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhnn::cli {

enum ExitCode : int {
    ok = 0,
    usage_error = 1,
    malformed_input = 2,
    verification_failure = 3,
};

// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhnn::cli
