#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cube_spectra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Output goes to
/// `out`; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cube_spectra::cli
