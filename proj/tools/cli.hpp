#pragma once

#include <ostream>

namespace bsp::cli {

enum ExitCode : int { kPass = 0, kUsageOrIo = 1, kCheckFailed = 2 };

/// Runs the `bsp` command line. Reports go to `out`; errors are written to
/// `err` as one JSON object {"error": kind, "message": text}. "-" as an input
/// path reads standard input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bsp::cli
