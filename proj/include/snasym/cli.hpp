#pragma once

#include <ostream>

namespace snasym {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidArgs = 1,
  kExitIo = 2,
  kExitSelftestFailed = 3,
};

/// Entry point for `snasym {scan,kcompare,order,selftest} ...`. Writes CSV and
/// reports to out, diagnostics to err; returns one of ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace snasym
