#ifndef JETSOLVE_CLI_HPP
#define JETSOLVE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace jetsolve::cli {

// Exit codes.
inline constexpr int kSolved = 0;
inline constexpr int kError = 1;
inline constexpr int kInconsistent = 2;
inline constexpr int kResidual = 3;
inline constexpr int kNotCertified = 4;
inline constexpr int kNotASolution = 5;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetsolve::cli

#endif  // JETSOLVE_CLI_HPP
