#pragma once

#include <iosfwd>

namespace hyperq {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // check found a Fano copy / no 2-coloring
  kExitUsage = 2,
  kExitIo = 3,
  kExitNoConvergence = 4,
  kExitVerifyFailed = 5,
};

/// Entry point of the `hyperq` tool: gen, spectral, check and verify.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperq
