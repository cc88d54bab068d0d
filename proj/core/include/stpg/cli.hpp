#ifndef STPG_CLI_HPP
#define STPG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stpg {

/// Command-line entry point shared by the `stpg` binary and the tests.
/// `args` excludes the program name. Exit codes: 0 success, 2 usage /
/// parse / validation errors, 3 infeasible analysis, 4 negative existence
/// result (no equilibrium / not potential).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace stpg

#endif  // STPG_CLI_HPP
