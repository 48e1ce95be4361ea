#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asyncflow::cli {

// Exit statuses of the asyncflow tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;

// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace asyncflow::cli
