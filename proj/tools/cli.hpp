#ifndef CMTRIG_TOOLS_CLI_HPP
#define CMTRIG_TOOLS_CLI_HPP

#include <ostream>

namespace cmtrig::cli
{

enum ExitCode : int {
    ok = 0,
    inconclusive = 2,
    failed = 3,
    usage = 64,
    // A module refused its input (outside the domain, pole guard, ...).
    domain = 65,
};

// Entry point shared by main() and the tests. Writes results to out (or to
// --output) and diagnostics to err.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace cmtrig::cli

#endif
