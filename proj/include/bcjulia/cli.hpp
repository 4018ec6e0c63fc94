#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcjulia::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kParseError = 2,
    kDegenerate = 3,
    kIoError = 4,
};

/// Runs the tool with args (without the program name), writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcjulia::cli
