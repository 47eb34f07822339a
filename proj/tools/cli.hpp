#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coverdepth::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitPrecondition = 4;
inline constexpr int kExitInternal = 5;

// Runs the tool on `args` (without the program name), writing results to
// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coverdepth::cli
