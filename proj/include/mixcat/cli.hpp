#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mixcat {

/// Runs the mixcat command line on `args` (without the program name).
/// Exit codes: 0 success, 1 property violation or unmet expectation, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixcat
