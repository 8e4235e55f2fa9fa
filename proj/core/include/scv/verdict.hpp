#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "scv/corpus.hpp"
#include "scv/gateway.hpp"

namespace scv {

class VerdictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExtractedLabel { Entailment, Contradiction, Unparseable };
enum class ExtractorKind { Keyword, ExternalScorer };
enum class DecisionMode { Majority, GreedyFallback };

std::string to_string(ExtractedLabel label);
std::string to_string(ExtractorKind kind);
std::string to_string(DecisionMode mode);
ExtractedLabel parse_extracted_label(const std::string& text);
ExtractorKind parse_extractor_kind(const std::string& text);
DecisionMode parse_decision_mode(const std::string& text);

constexpr ExtractedLabel to_extracted(VerificationLabel label) {
  return label == VerificationLabel::Entailment ? ExtractedLabel::Entailment
                                                : ExtractedLabel::Contradiction;
}

// Rule-based label extraction.  Rule 1: the last "Verification:" marker whose
// following token (case-insensitive, skipping whitespace/punctuation) is
// entailment/contradiction wins.  Rule 2: otherwise the decisive phrase
// occurring last in the text wins.  Otherwise Unparseable.
struct KeywordRules {
  std::string marker = "Verification:";
  std::vector<std::pair<std::string, ExtractedLabel>> decisive_phrases = {
      {"is entailed", ExtractedLabel::Entailment},
      {"is entailment", ExtractedLabel::Entailment},
      {"statement is a contradiction", ExtractedLabel::Contradiction},
      {"contradicts the information", ExtractedLabel::Contradiction},
  };
};

ExtractedLabel extract_label(const std::string& text,
                             const KeywordRules& rules = {});

// HTTP classifier used for chains the keyword rules cannot parse.
// POST {"text": ...} -> {"entailment": x, "contradiction": y}.
class ScorerClient {
 public:
  explicit ScorerClient(std::string url, int timeout_sec = 30);

  // argmax of the returned scores; nullopt when the scorer is unreachable,
  // answers malformed, or scores tie (soft-fail, logged).
  std::optional<VerificationLabel> classify(const std::string& text) const;

  const std::string& url() const { return url_; }

 private:
  std::string url_;
  int timeout_sec_;
};

// The tail of a chain handed to the external scorer: the last non-empty
// paragraph, or the whole trimmed text when there is none.
std::string concluding_excerpt(const std::string& text);

std::optional<VerificationLabel> score_with_external(const std::string& text,
                                                     const ScorerClient& scorer);

// Keeps the first occurrence, preserves order; equality is exact string
// match after trimming leading/trailing whitespace.
std::vector<std::string> dedup_chains(const std::vector<std::string>& texts);

struct ReasoningChain {
  std::string text;
  ExtractedLabel extracted = ExtractedLabel::Unparseable;
  ExtractorKind extractor = ExtractorKind::Keyword;

  bool operator==(const ReasoningChain&) const = default;
};

struct VoteTally {
  int entail_count = 0;
  int contra_count = 0;
  int unparseable_count = 0;

  bool operator==(const VoteTally&) const = default;
};

VoteTally tally_chains(const std::vector<ReasoningChain>& chains);

enum class VoteOutcome { Entailment, Contradiction, Tie };

// Strict majority among parseable votes; unparseable chains never vote.
// Equal parseable counts (including 0-0) tie.
VoteOutcome majority_vote(const VoteTally& tally);

struct VerdictRecord {
  std::string instance_id;
  std::vector<ReasoningChain> chains;  // distinct, at most the configured cap
  VoteTally tally;
  int rounds = 1;
  VerificationLabel final_label = VerificationLabel::Entailment;
  DecisionMode decided_by = DecisionMode::Majority;
  // Greedy decode adopted at a capped tie; kept out of `chains` so the cap
  // invariant holds.
  std::optional<std::string> fallback_chain;

  bool operator==(const VerdictRecord&) const = default;
};

struct VerifyConfig {
  SamplingSpec sampling;      // round-1 request (10 sequences by default)
  int escalation_batch = 5;   // extra sequences per tie-break round
  int chain_cap = 25;         // distinct-chain budget across all rounds
  std::int64_t base_seed = 0;
  KeywordRules rules;
  const ScorerClient* scorer = nullptr;  // optional, for unparseable chains

  void validate() const;  // cap >= num_sequences, batch >= 1
};

// Sample-vote-escalate protocol for one instance.  Round 1 requests
// sampling.num_sequences chains; while the vote ties, +escalation_batch
// chains per round with seed base_seed + round.  Distinct chains accumulate
// up to chain_cap (overflow is dropped in arrival order).  A tie at the cap
// (or a round that adds nothing new) falls back to one greedy decode; a
// greedy chain that is itself unparseable is a hard error flagging the
// instance for manual review.
VerdictRecord self_consistent_verify(const InferenceInstance& instance,
                                     const Corpus& corpus,
                                     const BackendHandle& backend,
                                     const VerifyConfig& config);

struct ChainCountStats {
  std::map<int, int> histogram;  // distinct-chain count -> number of records
  double mean = 0.0;
};

ChainCountStats chain_count_stats(const std::vector<VerdictRecord>& records);

// Audit-trail persistence: one full record per line.
std::string verdict_to_json_line(const VerdictRecord& record);
VerdictRecord verdict_from_json_line(const std::string& line);
void write_verdicts_jsonl(const std::filesystem::path& path,
                          const std::vector<VerdictRecord>& records);
std::vector<VerdictRecord> read_verdicts_jsonl(const std::filesystem::path& path,
                                               bool tolerate_partial_tail = false);

}  // namespace scv
