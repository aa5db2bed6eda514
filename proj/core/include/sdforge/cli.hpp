#pragma once
// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 I/O or parse error.

#include <iosfwd>

namespace sdforge {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sdforge
