#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadlsq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs one command line (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadlsq::cli
