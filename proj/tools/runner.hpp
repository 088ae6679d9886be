#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "workspace.hpp"

namespace comatrix::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct RunOptions {
  std::uint64_t budget = 1'000'000;
  unsigned workers = 1;
  bool fail_fast = false;
  bool seed_check = false;
  bool timing = true;
};

struct RunResult {
  Json report;
  int exit_code = kPass;
};

/// Executes the tasks in order. Task statuses: pass, fail, unverified, budget-exceeded.
RunResult run(const Workspace& w, const RunOptions& options);

/// Single task, as it appears in report["tasks"].
Json run_task(const Workspace& w, const TaskDef& t, const RunOptions& options);

/// Exit code from task statuses: any fail wins over budget-exceeded.
int exit_code_for(const Json& report);

std::string render_json(const Json& report);
/// Same tree as the JSON, one line per scalar.
std::string render_text(const Json& report);

}  // namespace comatrix::cli
