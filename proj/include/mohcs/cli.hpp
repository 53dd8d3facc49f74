#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mohcs::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_input = 3,
    exit_internal = 4,
};

/// Environment variable consulted for the default of --jobs.
inline constexpr const char* jobs_env_var = "MOHCS_JOBS";

/// Runs the command line given as args (args[0] is the program name).
/// Regular output goes to out unless --output redirects it; diagnostics,
/// summaries and timings go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mohcs::cli
