#pragma once

#include <iosfwd>

namespace pichar {

/// Runs the command-line tool. Results go to `out`, diagnostics to `err`.
/// Returns 0 on success, 2 on usage errors, 1 on verification failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pichar
