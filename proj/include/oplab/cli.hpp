#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oplab::cli {

enum ExitCode { ok = 0, usage_error = 1, computation_error = 2 };

/// Runs one command line (without the program name). Normal output goes to
/// `out`, diagnostics to `err`; `in` feeds CSV to guess, fit and gk.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace oplab::cli
