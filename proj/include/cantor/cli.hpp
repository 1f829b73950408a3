// Command-line front end.

#ifndef CANTOR_CLI_HPP_
#define CANTOR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cantor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // verification failed or not equal
inline constexpr int kExitUsage = 2;   // usage, parse or evaluation error

/// Runs one command.  `args` excludes the program name.  Expressions given
/// as "-" are read from `in`.
int run(std::vector<std::string> const& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace cantor::cli

#endif  // CANTOR_CLI_HPP_
