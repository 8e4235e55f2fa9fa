#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scv/corpus.hpp"
#include "scv/gateway.hpp"
#include "scv/verdict.hpp"

namespace scv {

class DistillError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DistilledExample {
  std::string instance_id;
  std::string prompt;  // verification prompt sent to the teacher
  std::string chain;   // teacher rationale; empty when generation failed
  std::optional<VerificationLabel> extracted;  // absent when unparseable/failed
  VerificationLabel gold = VerificationLabel::Entailment;
  bool kept = false;  // kept <=> extracted == gold
  std::string note;   // failure note; empty otherwise

  bool operator==(const DistilledExample&) const = default;
};

struct DistillStats {
  int total = 0;
  int kept = 0;
  double accuracy = 0.0;  // kept / total (0 for an empty run)
};

struct DistillConfig {
  KeywordRules rules;
  const ScorerClient* scorer = nullptr;
  std::int64_t seed = 0;
  int max_new_tokens = 1024;
  int parallelism = 1;
};

struct DistillResult {
  std::vector<DistilledExample> examples;  // instance_id order
  DistillStats stats;
};

// One greedy teacher generation per gold-labeled instance, label extraction
// (keyword first, external scorer for unparseable chains when configured),
// kept iff extracted matches gold.  Teacher failures are recorded with a note
// and the pipeline continues; an instance without a gold label is a hard
// error.
DistillResult distill_split(const std::vector<InferenceInstance>& instances,
                            const Corpus& corpus, const BackendHandle& teacher,
                            const DistillConfig& config);

// Emits {"text": <CoT training record>} per kept example, instance_id order.
// A non-kept example in the input is a hard error.
void emit_cot_dataset(const std::vector<DistilledExample>& examples,
                      const std::map<std::string, InferenceInstance>& instances_by_id,
                      const Corpus& corpus, const std::filesystem::path& out_path);

// Emits {"text": <label-only record>} for every gold-labeled instance.
void emit_label_only_dataset(const std::vector<InferenceInstance>& instances,
                             const Corpus& corpus,
                             const std::filesystem::path& out_path);

// Audit persistence for the non-kept examples and the headline stats.
void write_rejected_jsonl(const std::vector<DistilledExample>& examples,
                          const std::filesystem::path& path);
void write_distill_stats(const DistillStats& stats,
                         const std::filesystem::path& path,
                         const std::map<std::string, DistillStats>* per_split = nullptr);

// Low-rank adapter bookkeeping: the adapted base matrices and the factor rank.
struct LoraShape {
  int rank = 8;
  std::vector<std::pair<std::int64_t, std::int64_t>> adapted_matrices;  // (d_in, d_out)
  int num_layers = 1;
  std::int64_t base_param_count = 1;
  int alpha = 32;  // metadata only; does not affect the count
};

struct LoraParamCount {
  std::int64_t trainable = 0;
  double fraction_of_base = 0.0;
};

// trainable = num_layers * sum over matrices of rank * (d_in + d_out);
// fraction = trainable / base_param_count.  Non-positive dimensions throw.
LoraParamCount lora_param_count(const LoraShape& shape);

}  // namespace scv
