#pragma once

#include <iosfwd>

#include "json.hpp"
#include "trialg/trisys/report.hpp"

namespace trialg {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

nlohmann::json report_to_json(const AxiomReport& r);

/// Subcommands: build, verify, lie, reduce-n5, simplicity, export, import-check.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trialg
