#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbk {

// Exit codes of the fbk command line.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one fbk invocation; args excludes the program name. JSON goes to out,
// diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fbk
