#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace wm {

struct CliResult {
    int exit_code = 0;
    nlohmann::json report;  // full run report, already printed by run_cli
};

// Parses argv (without the program name), executes the verb and returns the
// exit code plus the report that went to stdout.  Exit codes: 0 success,
// 1 witness/solvability expected but absent, 2 usage or format problems,
// 3 budget or horizon overflows.
CliResult run_cli(const std::vector<std::string>& args, std::ostream& out);

}  // namespace wm
