#ifndef LEIBALG_CLI_HPP
#define LEIBALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "leibalg/error.hpp"

namespace leibalg {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGuard = 3;

int exit_code_for(Errc code);

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leibalg

#endif  // LEIBALG_CLI_HPP
