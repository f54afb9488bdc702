#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hirzewahl {

/// Runs one CLI invocation (without the program name).  Writes results to
/// `out`, diagnostics to `err`.  Exit codes: 0 success, 1 hypothesis not met
/// under --strict, 2 usage or input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hirzewahl
