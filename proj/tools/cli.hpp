#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace decwa::cli {

// Exit statuses of the decwa tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace decwa::cli
