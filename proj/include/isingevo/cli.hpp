#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isingevo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the isingevo command-line tool. args excludes the program
/// name. A `--config FILE` of key=value lines pre-populates flags; flags given
/// on the command line take precedence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isingevo::cli
