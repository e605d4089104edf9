#ifndef COCON_CLI_HPP
#define COCON_CLI_HPP

#include <iosfwd>

namespace cocon {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFalse = 1, kExitUsage = 2, kExitBound = 3 };

/**
 * Entry point of the `cocon` tool, separated from main() so tests can drive it.
 * JSON lines go to `out` (or the --output file), warnings and usage errors to `err`.
 */
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cocon

#endif
