#pragma once

#include <ostream>
#include <span>
#include <string>

namespace sqe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the golden tests. `args` excludes
/// the program name. Standard input is read only when a subcommand needs
/// graphs and neither --g6 nor --input was given.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace sqe::cli
