#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scv {

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The four premise sections of a clinical trial report.
enum class SectionName { Eligibility, Intervention, Results, AdverseEvents };

inline constexpr std::array<SectionName, 4> kAllSections = {
    SectionName::Eligibility, SectionName::Intervention,
    SectionName::Results, SectionName::AdverseEvents};

enum class InstanceKind { Single, Comparison };

enum class VerificationLabel { Entailment, Contradiction };

// 0/1 encoding used by the contrast-set metrics (Entailment -> 1).
constexpr int label_value(VerificationLabel label) {
  return label == VerificationLabel::Entailment ? 1 : 0;
}

constexpr VerificationLabel opposite(VerificationLabel label) {
  return label == VerificationLabel::Entailment ? VerificationLabel::Contradiction
                                                : VerificationLabel::Entailment;
}

enum class InterventionClass { None, Preserving, Altering };

enum class InterventionSubtype {
  Paraphrase,
  ContradictionPreserving,
  NumericalParaphrase,
  NumericalContradiction,
  Definitions,
  ContradictionAltering,
  NumericalContradictionAltering,
};

// Preserving for the first five subtypes, Altering for the last two.
InterventionClass subtype_class(InterventionSubtype subtype);

std::string to_string(SectionName section);
std::string to_string(InstanceKind kind);
std::string to_string(VerificationLabel label);
std::string to_string(InterventionClass clazz);
std::string to_string(InterventionSubtype subtype);

// Parsers accept the canonical spelling plus common case/underscore variants;
// anything else throws CorpusError.
SectionName parse_section(const std::string& text);
InstanceKind parse_kind(const std::string& text);
VerificationLabel parse_label(const std::string& text);
InterventionClass parse_intervention_class(const std::string& text);
InterventionSubtype parse_intervention_subtype(const std::string& text);

struct InterventionTag {
  std::optional<std::string> anchor_id;
  InterventionClass clazz = InterventionClass::None;
  std::optional<InterventionSubtype> subtype;

  bool operator==(const InterventionTag&) const = default;
};

struct ClinicalTrialRecord {
  std::string ctr_id;
  std::map<SectionName, std::vector<std::string>> sections;

  // Always defined for the four section names; missing sections are empty.
  const std::vector<std::string>& section(SectionName name) const;

  bool operator==(const ClinicalTrialRecord&) const = default;
};

struct InferenceInstance {
  std::string instance_id;
  InstanceKind kind = InstanceKind::Single;
  std::string primary_ctr;
  std::optional<std::string> secondary_ctr;
  SectionName section = SectionName::Eligibility;
  std::string statement;
  std::optional<VerificationLabel> gold_label;
  InterventionTag intervention;

  bool operator==(const InferenceInstance&) const = default;
};

using Corpus = std::map<std::string, ClinicalTrialRecord>;

enum class Split { Train, Validation, Test };
std::string to_string(Split split);
Split parse_split(const std::string& text);

// Source-schema indirection: for every canonical field a list of JSON keys to
// probe, first hit wins.  A mapping file (flat JSON object canonical -> key)
// replaces the candidate list for the named fields.
struct FieldMap {
  std::map<std::string, std::vector<std::string>> candidates;

  static FieldMap defaults();
  static FieldMap load(const std::filesystem::path& mapping_file);

  const std::vector<std::string>& keys_for(const std::string& field) const;
};

// One JSON document per CTR file; ids derive from the file name stem.
// Unreadable/duplicate files are hard errors naming the offender.
Corpus load_corpus(const std::filesystem::path& ctr_directory,
                   const FieldMap& field_map = FieldMap::defaults());

// Instances file: JSON object instance_id -> fields (or a canonical .jsonl
// dump, detected by extension).  Result is sorted by instance_id.
std::vector<InferenceInstance> load_instances(
    const std::filesystem::path& instances_file, Split split,
    const FieldMap& field_map = FieldMap::defaults());

// Canonical JSONL dump, one instance per line; read(write(x)) == x.
void write_instances_jsonl(const std::filesystem::path& path,
                           const std::vector<InferenceInstance>& instances);
std::vector<InferenceInstance> read_instances_jsonl(
    const std::filesystem::path& path);

std::string instance_to_json_line(const InferenceInstance& instance);
InferenceInstance instance_from_json_line(const std::string& line);

struct ContrastPair {
  InferenceInstance anchor;
  InferenceInstance variant;

  bool operator==(const ContrastPair&) const = default;
};

struct ContrastSets {
  std::vector<InferenceInstance> control;
  std::vector<ContrastPair> preserving_pairs;
  std::vector<ContrastPair> altering_pairs;
};

// Splits instances into the control set and the two pair lists.  Every
// variant's anchor must resolve to a control instance; dangling anchors are a
// hard error listing the offending ids.  When `predicted_ids` is given, any
// instance without a prediction is reported the same way.
ContrastSets build_contrast_sets(
    const std::vector<InferenceInstance>& instances,
    const std::vector<std::string>* predicted_ids = nullptr);

}  // namespace scv
