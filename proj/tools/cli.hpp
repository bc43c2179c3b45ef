#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ewi::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;      // bad flags, unreadable or malformed input
inline constexpr int kRejected = 2;   // not a partial cube, not a tree, verification mismatch

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ewi::cli
