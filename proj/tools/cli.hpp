#ifndef GHPOLY_TOOLS_CLI_HPP
#define GHPOLY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ghpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitBudget = 3;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace ghpoly::cli

#endif
