#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace whg::cli {

// Exit codes of the `whg` tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNotConverged = 3;

// args[0] is the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace whg::cli
