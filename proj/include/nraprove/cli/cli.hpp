#ifndef NRAPROVE_CLI_CLI_HPP
#define NRAPROVE_CLI_CLI_HPP

#include <iosfwd>

namespace nraprove {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           // bad flags, unreadable or invalid input files
  kExitDisagreement = 2,    // one solver said sat where another said unsat
  kExitSpawnFailure = 3,    // a solver executable could not be started
  kExitNotProved = 4,       // prove finished without a proof
};

// Subcommands: prove, translate, bench, plot, examples.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nraprove

#endif
