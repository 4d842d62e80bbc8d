// Command layer behind the duoidal tool: validate, construct, roundtrip, classify, and the fixture catalog.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "duo/io.hpp"

namespace duo {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitParse = 2, kExitBudget = 3 };

struct CommandResult {
  std::string status = "pass";  // pass|fail|error
  int exit_code = kExitPass;
  Report report;
  nlohmann::json result;                                // command-specific summary, e.g. the Hopf classification
  std::string error;                                    // set when status is "error"
  std::vector<std::pair<std::string, SpecFile>> outputs;  // suggested file stem, constructed file

  // {"status", "checks", "artifacts"} plus "result" / "error" when present.
  nlohmann::json to_json(const std::vector<std::string>& artifacts) const;
};

const std::vector<std::string>& construct_targets();  // from-braided, warp, modules, ...

// All four parse the text first; parse errors give exit 2 and budget overruns exit 3.
CommandResult run_validate(const std::string& text);
CommandResult run_construct(const std::string& target, const std::string& text);
CommandResult run_roundtrip(const std::string& text);
CommandResult run_classify(const std::string& text);

// Environment variable mirroring --budget.
inline constexpr const char* kBudgetEnv = "DUOIDAL_BUDGET";

std::vector<std::string> fixture_catalog();
// Throws ParseError naming the catalog for unknown names.
SpecFile emit_fixture(const std::string& name);

}  // namespace duo
