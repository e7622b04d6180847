#pragma once

#include <string>

#include "geomphase/config.hpp"
#include "geomphase/report.hpp"

namespace geomphase {

// Exit codes: 0 success, 2 config error, 3 computational error
// (degeneracy, lost track, no convergence, undefined constituents),
// 4 internal invariant violation.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitComputational = 3,
    kExitInternal = 4,
};

struct CommandOutcome {
    nlohmann::json doc;
    int exit_code = kExitOk;
};

CommandOutcome cmd_transport(const RunConfig& config);
CommandOutcome cmd_phases(const RunConfig& config);
CommandOutcome cmd_classify(const RunConfig& config);
CommandOutcome cmd_identities(const RunConfig& config);
CommandOutcome cmd_table(int n, bool expand);
CommandOutcome cmd_demo(const std::string& name, const std::string& format);

// Canned demo configurations (spin, conical, crossing).
RunConfig demo_config(const std::string& name);

}  // namespace geomphase
