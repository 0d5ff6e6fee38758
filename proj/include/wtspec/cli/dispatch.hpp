#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wtspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitAssert = 3;
inline constexpr int kExitUsage = 64;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out` (or the files named by flags), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wtspec::cli
