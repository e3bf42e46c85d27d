#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncg::cli {

// Exit codes shared by every subcommand.
inline constexpr int kHolds = 0;
inline constexpr int kViolated = 1;
inline constexpr int kError = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ncg::cli
