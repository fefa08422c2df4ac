#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cox::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kParseError = 2;
inline constexpr int kSemanticError = 3;
inline constexpr int kBudgetError = 4;

// Runs the command line given as argv-style arguments (program name
// excluded). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cox::cli
