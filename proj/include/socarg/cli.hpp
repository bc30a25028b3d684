#pragma once

#include <iosfwd>

namespace socarg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_success = 0,
    exit_input_error = 1,
    exit_nonconvergence = 2,
    exit_invariant_breach = 3,
};

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace socarg
