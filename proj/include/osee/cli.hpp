#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace osee {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

/// Runs the command line `args` (without the program name). Data goes to the
/// `--output` file, or to `out` when the output is "-"; the one-line summary
/// and diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osee
