#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rigiditykit {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInvariantBreach = 2;

/// Runs one command; `args` excludes the program name. Output depends only on
/// the arguments (fuzz timing goes to `err`, and only with --timing).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rigiditykit
