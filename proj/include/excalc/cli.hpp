#pragma once

#include <iosfwd>

namespace excalc {

/// Entry point behind the excalc binary. Exit codes: 0 success, 1 parse or
/// usage error, 2 domain error, 3 precondition failure. Diagnostics go to
/// err; results to out. argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace excalc
