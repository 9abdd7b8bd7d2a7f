#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fanqec/chebyshev.hpp"

namespace fanqec {

enum class OutputFormat { PlainText, Csv, Json };

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArgs = 2;
inline constexpr int kExitDisconnected = 3;

// Runs the fanqec command line. args[0] is the program name. Data goes to
// `out`, diagnostics to `err`. `source` feeds the identity battery of
// `verify`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const FamilySource& source = family);

// "%.17g"
std::string format_double(double v);

}  // namespace fanqec
