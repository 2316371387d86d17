#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace metrel::cli {

// Exit codes.
inline constexpr int kAffirmative = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace metrel::cli
