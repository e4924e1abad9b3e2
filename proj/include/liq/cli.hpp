#ifndef LIQ_CLI_HPP_
#define LIQ_CLI_HPP_

#include <iosfwd>

namespace liq::cli {

  inline constexpr int kExitHolds       = 0;
  inline constexpr int kExitFails       = 1;
  inline constexpr int kExitInput       = 2;
  inline constexpr int kExitConsistency = 3;

  // Parses the command line, runs one subcommand and prints its report.
  // Returns 0 when every verdict holds, 1 when one fails, 2 on bad input
  // and 3 when two routes that must agree do not.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liq::cli

#endif  // LIQ_CLI_HPP_
