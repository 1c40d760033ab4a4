#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rmg::cli {

/// Process exit codes. 0-2 mirror the three search verdicts.
enum ExitCode : int {
    success = 0,          ///< also: a witness was found
    property_holds = 1,
    budget_exceeded = 2,
    usage_error = 3,
    input_error = 4,
    limit_exceeded = 5,
    failure = 6,
};

/// Relative output paths are resolved against this directory when it is set.
inline constexpr const char * output_dir_env = "RMG_OUTPUT_DIR";

/// Runs one command. `args` excludes the program name.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
