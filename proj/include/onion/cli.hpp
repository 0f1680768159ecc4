#pragma once

#include <iosfwd>

namespace onion {

// Batch front door: compute, verify, bench, gen, plot.  Returns the process
// exit code: 0 ok, 1 verification mismatch, 2 input error, 3 internal
// invariant failure.
int runCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace onion
