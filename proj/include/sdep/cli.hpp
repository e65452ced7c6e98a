#ifndef SDEP_CLI_HPP
#define SDEP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sdep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdep::cli

#endif  // SDEP_CLI_HPP
