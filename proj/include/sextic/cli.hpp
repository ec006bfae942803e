#ifndef SEXTIC_CLI_HPP
#define SEXTIC_CLI_HPP

#include <iosfwd>

namespace sextic {

/// Runs one subcommand. Exit codes: 0 all PASS, 1 a FLAGGED or FAILED verdict, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sextic

#endif
