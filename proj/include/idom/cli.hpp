#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idom::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1; // "none" under --status-exit
inline constexpr int kUsage = 2;    // parse, usage or precondition error
inline constexpr int kLimit = 3;    // brute-force cap or work budget exceeded

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace idom::cli
