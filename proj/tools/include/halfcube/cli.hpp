#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfcube::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

/// Runs the command line (without the program name). Rendered output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfcube::cli
