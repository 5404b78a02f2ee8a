#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gog {

// Runs one command-line invocation against the given streams.  args holds
// the arguments after the program name.  Reports go to out; diagnostics
// (warnings, error messages) go to err.
//
// Exit codes: 0 success, 1 validation or domain error, 2 a requested
// invariant is undefined for the input, 3 parse or usage error, 4 an
// enumeration budget was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gog
