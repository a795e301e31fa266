#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitkit::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kDecided = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kUnknown = 2;

/// Run one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbitkit::cli
