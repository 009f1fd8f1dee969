#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfdouble {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line (without the program name). The JSON report goes
/// to `out` or to the --out path; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfdouble
