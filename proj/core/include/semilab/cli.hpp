#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace semilab {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

/// Runs one subcommand. args excludes the program name. The JSON report
/// goes to `out`; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semilab
