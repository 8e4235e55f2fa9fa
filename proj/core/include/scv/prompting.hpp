#pragma once

#include <stdexcept>
#include <string>

#include "scv/corpus.hpp"

namespace scv {

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PromptKind { VerificationQuery, CoTTrainingRecord, LabelOnlyTrainingRecord };

struct RenderedPrompt {
  std::string text;
  PromptKind kind = PromptKind::VerificationQuery;
};

// Template fragments shared by all three renderings.
namespace prompt_text {
inline constexpr const char* kOpen = "<s>[INST] Primary clinical trial report:";
inline constexpr const char* kSecondaryHeader = "Secondary clinical trial report:";
inline constexpr const char* kStatementPrefix = "Statement: ";
inline constexpr const char* kDirectiveSingle =
    "Verify whether the statement is entailed in the primary clinical trial "
    "report with Entailment or Contradiction. [/INST]";
inline constexpr const char* kDirectiveComparison =
    "Verify whether the statement is entailed in the clinical trial reports "
    "with Entailment or Contradiction. [/INST]";
inline constexpr const char* kCue = "Let's verify it step by step:";
inline constexpr const char* kVerificationPrefix = "Verification: ";
inline constexpr const char* kClose = " </s>";
}  // namespace prompt_text

// Query prompt: premise block(s), statement, directive, reasoning cue.
// Blocks are separated by exactly one blank line; section lines are joined
// with single spaces; the text ends with the cue line, no trailing newline.
// Missing CTRs or an empty required section raise RenderError naming the
// instance.
RenderedPrompt render_verification_prompt(const InferenceInstance& instance,
                                          const Corpus& corpus);

// Query prompt + " " + chain_text + blank line + "Verification: <label> </s>".
// The label line is appended unconditionally, even when the chain already
// argues the verdict.
RenderedPrompt render_cot_training_record(const InferenceInstance& instance,
                                          const Corpus& corpus,
                                          const std::string& chain_text,
                                          VerificationLabel label);

// Same layout but directly from the directive to "Verification: <label> </s>",
// with no reasoning cue.
RenderedPrompt render_label_only_record(const InferenceInstance& instance,
                                        const Corpus& corpus,
                                        VerificationLabel label);

}  // namespace scv
