#pragma once

#include <iosfwd>

namespace polyadic {

/// Runs the command line tool. Returns 0 on success, 1 when the input is
/// rejected by the library, 2 on bad usage.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polyadic
