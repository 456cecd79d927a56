#pragma once

#include <iosfwd>

namespace ordermap::cli {

/// Command-line entry point. Subcommands: eval, series, map, check, suite.
/// Returns 0 when every verdict passes, 1 on a failed verdict or numeric
/// failure, 2 on a usage or domain error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordermap::cli
