#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scv/eval.hpp"
#include "scv/gateway.hpp"

namespace scv {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class BackendKind { Remote, Chat, Replay };
std::string to_string(BackendKind kind);
BackendKind parse_backend_kind(const std::string& text);

struct BackendConfig {
  BackendKind kind = BackendKind::Replay;
  std::string url;
  std::string auth_env_var;  // name of the env var holding the bearer token
  std::string replay_file;
  std::string model;  // chat adapter only
  int max_retries = 3;

  bool operator==(const BackendConfig&) const = default;
};

struct EscalationConfig {
  int batch_size = 5;
  int cap = 25;

  bool operator==(const EscalationConfig&) const = default;
};

struct ScorerConfig {
  std::string url;

  bool operator==(const ScorerConfig&) const = default;
};

// Flat key=value config with CLI-flag overrides (flags win).  All randomness
// flows from `seed`; sampling.seed is derived per request and is not a config
// key.
struct RunConfig {
  std::string corpus_dir;
  std::vector<std::string> instances_files;  // comma-separated in the file
  BackendConfig backend;
  SamplingSpec sampling;
  EscalationConfig escalation;
  std::optional<ScorerConfig> scorer;
  std::string output_dir = "out";
  int parallelism = 1;
  std::int64_t seed = 0;
  std::string field_map_file;
  F1Averaging f1_averaging = F1Averaging::EntailmentBinary;

  bool operator==(const RunConfig&) const = default;

  // cap >= num_sequences, batch_size >= 1, parallelism >= 1, positive
  // sampling counts; throws ConfigError.
  void validate() const;

  std::string to_text() const;
  static RunConfig from_text(const std::string& text);
  static RunConfig load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  // Applies one "key = value" assignment; unknown keys throw ConfigError.
  void set(const std::string& key, const std::string& value);
};

}  // namespace scv
