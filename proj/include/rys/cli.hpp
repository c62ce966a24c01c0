#pragma once

// Command-line front end.  run_command parses one invocation (arguments
// without the program name), dispatches to the subcommand, and writes the
// report to `out` and diagnostics to `err`.
//
// Exit codes: 0 success (or every verified claim matching its recorded
// expectation), 1 a verify claim deviating from expectation, 2 input errors
// (malformed JSON, schema violations, unknown flags).

#include <iosfwd>
#include <string>
#include <vector>

namespace rys {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rys
