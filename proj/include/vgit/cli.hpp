#pragma once

#include <iosfwd>

namespace vgit {

// Full command-line front end. Returns the process exit code:
//   0  success (and "true" for boolean queries)
//   1  "false" for boolean queries (equiv, witness)
//   2  usage, parse, or domain errors
//   3  a verification assertion failed (a counterexample was found)
//   4  enumeration size cap exceeded
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace vgit
