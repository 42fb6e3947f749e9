#pragma once

#include "lcsb/cli/config.hpp"
#include "lcsb/cli/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lcsb {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitValidation = 2,
    kExitFlagged = 3,
};

// Runs a validated command in memory. `config.seed` must be set.
RunOutput execute(const RunConfig& config);

// Fills in the seed, executes, writes results and manifest, returns the exit code.
int run(RunConfig config, std::ostream& out, std::ostream& err);

// Full command line: parses flags (and --config), then calls run().
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lcsb
