#pragma once

#include "lietk/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lietk {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_bad_cartan = 3,
    exit_precondition = 4,
    exit_non_split = 5,
    exit_not_semisimple = 6,
};

int exit_code_for(ErrorKind kind);

/// Runs one invocation; `args` excludes the program name. Input "-" reads
/// `in`, output "-" writes `out`, diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace lietk
