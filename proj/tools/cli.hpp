#pragma once

// The thuemorse command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace thuemorse::cli {

/// Exit codes: 0 answer or pass, 1 failed check or usage error, 2 inconclusive.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUnknown = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thuemorse::cli
