#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scv/corpus.hpp"

namespace scv {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Faithfulness is undefined when no altering pair has a correctly predicted
// anchor; an explicit error beats a silent 0.
class EmptyEligibleSet : public EvalError {
 public:
  using EvalError::EvalError;
};

using PredictionSet = std::map<std::string, VerificationLabel>;

PredictionSet read_predictions_jsonl(const std::filesystem::path& path);
void write_predictions_jsonl(const std::filesystem::path& path,
                             const PredictionSet& predictions);

enum class F1Averaging { EntailmentBinary, Macro };
std::string to_string(F1Averaging averaging);
F1Averaging parse_f1_averaging(const std::string& text);

// Control-set F1, Entailment as the positive class (macro over both classes
// with the flag); 0 when precision+recall is 0.  Missing predictions or gold
// labels are hard errors listing the ids.
double baseline_f1(const PredictionSet& predictions,
                   const std::vector<InferenceInstance>& control,
                   F1Averaging averaging = F1Averaging::EntailmentBinary);

// Over N preserving pairs: (1/N) * sum(1 - |f(variant) - f(anchor)|) with the
// 0/1 label encoding, i.e. the fraction of pairs whose predictions agree.
double consistency(const PredictionSet& predictions,
                   const std::vector<ContrastPair>& preserving_pairs);

// Restricted to pairs whose anchor is predicted correctly; over those N:
// (1/N) * sum |f(anchor) - f(variant)| — the fraction that flips.  Throws
// EmptyEligibleSet when no pair survives the filter.
double faithfulness(const PredictionSet& predictions,
                    const std::vector<ContrastPair>& altering_pairs);

struct MetricsCounts {
  int control_n = 0;
  int preserving_n = 0;
  int altering_n = 0;
  int altering_eligible_n = 0;  // <= altering_n

  bool operator==(const MetricsCounts&) const = default;
};

struct MetricsReport {
  double baseline_f1 = 0.0;
  double consistency = 0.0;
  double faithfulness = 0.0;
  std::map<SectionName, double> per_section_f1;
  std::map<InterventionSubtype, double> per_preserving_subtype_consistency;
  std::map<InterventionSubtype, double> per_altering_subtype_faithfulness;
  MetricsCounts counts;
};

// Headline scores plus per-section F1 over the control set and per-subtype
// consistency/faithfulness over the pair lists.  Empty partitions are absent
// from the maps, never reported as 0.
MetricsReport breakdowns(const PredictionSet& predictions,
                         const ContrastSets& sets,
                         F1Averaging averaging = F1Averaging::EntailmentBinary);

// Reporting precision: 4 decimal places, half-even.
double round_score(double value);
std::string format_score(double value);  // e.g. "0.8000"

void write_metrics_json(const std::filesystem::path& path,
                        const MetricsReport& report);
std::string metrics_table(const MetricsReport& report);

}  // namespace scv
