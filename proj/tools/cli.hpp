#pragma once

#include <iosfwd>

namespace boolfrac::cli {

/// Runs the command line. Returns the exit status: 0 on success or when
/// every law passed, 1 on domain errors and law failures, 2 on usage and
/// parse errors. Diagnostics go to `err` as a single line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace boolfrac::cli
