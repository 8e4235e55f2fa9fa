#pragma once

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "scv/config.hpp"
#include "scv/distill.hpp"
#include "scv/eval.hpp"
#include "scv/gateway.hpp"
#include "scv/verdict.hpp"

namespace scv {

// Exit codes shared by every subcommand.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

struct InferOutcome {
  std::filesystem::path verdicts_path;
  std::filesystem::path predictions_path;
  int completed = 0;  // verdicts produced by this run
  int resumed = 0;    // instances skipped because a verdict already existed
  std::vector<std::string> failures;  // "instance_id: message"
};

// Runs self-consistent verification over every configured instance and writes
// verdicts.jsonl + predictions.jsonl under config.output_dir.  Resumable: an
// interrupted run leaves verdicts.jsonl.partial behind and a re-run skips the
// instances recorded there (or in a complete verdicts.jsonl).  Outputs are
// rewritten sorted by instance id, so re-running over complete output is
// byte-stable.  `backend_override` substitutes the configured backend (used
// for instrumented tests); pass nullptr to build one from config.
InferOutcome run_infer(const RunConfig& config, BackendHandle backend_override = nullptr);

struct DistillOutcome {
  std::filesystem::path cot_path;
  std::filesystem::path label_only_path;
  std::filesystem::path rejected_path;
  std::filesystem::path stats_path;
  DistillStats overall;
  std::map<std::string, DistillStats> per_split;  // keyed by instances file stem
};

// Generates teacher rationales for every gold-labelled instance, keeps the
// ones whose extracted label matches gold, and writes the CoT dataset, the
// label-only dataset, rejected.jsonl, and distill_stats.json under
// config.output_dir.
DistillOutcome run_distill(const RunConfig& config, BackendHandle backend_override = nullptr);

struct EvaluateOutcome {
  std::filesystem::path metrics_path;
  MetricsReport report;
  std::string table;
};

// Scores a predictions file against the configured instances (which carry the
// contrast-set annotations) and writes metrics.json under config.output_dir.
// Every control/preserving/altering instance must have a prediction; missing
// ids raise EvalError listing them.
EvaluateOutcome run_evaluate(const RunConfig& config,
                             const std::filesystem::path& predictions_file);

struct StatsOutcome {
  ChainCountStats stats;
  int verdict_count = 0;
  std::string table;  // histogram + mean, ready to print
};

// Summarises distinct-chain counts over a verdicts file.
StatsOutcome run_stats(const std::filesystem::path& verdicts_file);

struct FixtureCheckOutcome {
  int checked = 0;
  std::vector<std::string> mismatches;  // "golden_path: detail"
};

// Re-renders every prompt listed in <fixtures_dir>/prompts/manifest.json from
// the fixture corpus + instances and byte-compares against the checked-in
// golden files.
FixtureCheckOutcome run_render_check(const std::filesystem::path& fixtures_dir);

// Exit-code wrappers around the run_* functions: progress goes to `out`,
// failures to `err`.  Domain failures return kExitDomainError; configuration
// problems return kExitUsageError.
int cmd_distill(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_infer(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_evaluate(const RunConfig& config, const std::filesystem::path& predictions_file,
                 std::ostream& out, std::ostream& err);
int cmd_stats(const std::filesystem::path& verdicts_file, std::ostream& out, std::ostream& err);
int cmd_render_check(const std::filesystem::path& fixtures_dir, std::ostream& out,
                     std::ostream& err);

}  // namespace scv
