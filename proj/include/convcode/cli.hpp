#pragma once

#include <iosfwd>

namespace convcode {

// Command-line driver behind the convcode binary, separated from main so
// tests can run it against in-memory streams.  Exit codes: 0 success or
// equivalent, 1 well-formed negative verdict, 2 refusal (failed
// precondition, exceeded cap, zero-index refusal), 3 parse or usage
// error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convcode
