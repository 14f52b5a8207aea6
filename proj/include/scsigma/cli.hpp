#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace scsigma {

/// Runs one CLI invocation (args excludes the program name) against the
/// given output and error streams. Exit codes: 0 success, 2 config or usage
/// error, 3 numerical failure.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace scsigma
