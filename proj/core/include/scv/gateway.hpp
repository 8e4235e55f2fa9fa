#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scv {

class GatewayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Transport kept failing past the retry budget (or a replay fixture is
// missing for the requested key).
class BackendUnavailable : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

// The backend answered, but not in the agreed shape; carries a payload
// excerpt for diagnosis.
class ProtocolError : public GatewayError {
 public:
  using GatewayError::GatewayError;
};

enum class SamplingMode { Greedy, Temperature };

std::string to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(const std::string& text);

struct SamplingSpec {
  SamplingMode mode = SamplingMode::Temperature;
  double temperature = 0.7;  // used iff Temperature
  int top_k = 50;            // used iff Temperature
  int num_sequences = 10;
  std::int64_t seed = 0;
  int max_new_tokens = 1024;

  static SamplingSpec greedy(std::int64_t seed = 0, int max_new_tokens = 1024);

  // Greedy requires num_sequences == 1; all counts must be positive.
  void validate() const;

  bool operator==(const SamplingSpec&) const = default;
};

struct GenerationRequest {
  std::string request_id;
  std::string prompt;
  SamplingSpec sampling;
};

struct GenerationResult {
  std::string request_id;
  std::vector<std::string> sequences;  // at most sampling.num_sequences
  std::string backend_name;
};

// Text-generation backend contract.  run() must be safe to call from
// multiple threads; implementations synchronize internally.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string name() const = 0;
  virtual std::vector<std::string> run(const std::string& prompt,
                                       const SamplingSpec& sampling) = 0;
};

using BackendHandle = std::shared_ptr<Backend>;

struct HttpBackendOptions {
  std::string url;            // full endpoint, e.g. http://host:8080/generate
  std::string auth_token;     // sent as "Authorization: Bearer ..." when set
  int max_retries = 3;        // transient-failure budget (connect errors, 429, 5xx)
  int retry_backoff_ms = 100;
  int timeout_sec = 120;
  bool chat_completions = false;  // OpenAI-style adapter; drops top_k (logged once)
  std::string model;              // model field for the chat adapter
};

BackendHandle make_http_backend(HttpBackendOptions options);

// Adapts a callable for scripted/in-process backends; the callable must be
// thread-safe.
BackendHandle make_function_backend(
    std::string name,
    std::function<std::vector<std::string>(const std::string&, const SamplingSpec&)> fn);

std::uint64_t fnv1a64(std::string_view bytes);

// Lookup key for replay fixtures: prompt hash, sampling spec, and seed.
// Fields unused by the mode (temperature/top_k under Greedy) are canonicalized
// so equivalent specs key identically.
std::string replay_key(std::string_view prompt, const SamplingSpec& sampling);

// Deterministic backend for tests and offline reruns.  Fixtures are JSONL,
// one of per line:
//   {"prompt": ..., "sampling": {mode, temperature, top_k, num_sequences,
//    seed, max_new_tokens}, "sequences": [...]}
//   {"key": "<replay_key string>", "sequences": [...]}
class ReplayBackend : public Backend {
 public:
  ReplayBackend() = default;
  explicit ReplayBackend(const std::filesystem::path& fixtures_jsonl);

  std::string name() const override { return "replay"; }
  std::vector<std::string> run(const std::string& prompt,
                               const SamplingSpec& sampling) override;

  void add(const std::string& prompt, const SamplingSpec& sampling,
           std::vector<std::string> sequences);

  // Number of run() lookups issued; lets tests assert that a resumed
  // pipeline made no generation calls.
  std::uint64_t calls() const { return calls_.load(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> table_;
  std::atomic<std::uint64_t> calls_{0};
};

std::shared_ptr<ReplayBackend> make_replay_backend(
    const std::filesystem::path& fixtures_jsonl);

// Escalation seed schedule: round r (0-based) samples with base_seed + r.
constexpr std::int64_t escalation_seed(std::int64_t base_seed, int round_index) {
  return base_seed + round_index;
}

// Blocking single generation.  Enforces the result-size contract
// (|sequences| <= num_sequences -> ProtocolError otherwise) and stamps the
// request id and backend name.
GenerationResult generate(const GenerationRequest& request,
                          const BackendHandle& backend);

struct BatchEntry {
  std::optional<GenerationResult> result;
  std::string error;  // empty on success

  bool ok() const { return result.has_value(); }
};

// Runs requests through a bounded worker pool (at most `parallelism` in
// flight).  Results come back in request order; one request's failure is
// recorded in its entry and does not abort siblings.
std::vector<BatchEntry> generate_batch(const std::vector<GenerationRequest>& requests,
                                       const BackendHandle& backend,
                                       int parallelism);

}  // namespace scv
