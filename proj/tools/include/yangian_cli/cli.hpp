#pragma once

#include <iosfwd>

namespace yangian::cli {

// Exit codes of every subcommand.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

// Entry point shared by the yangian binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace yangian::cli
