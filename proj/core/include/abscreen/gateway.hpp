#pragma once

#include "abscreen/clock.hpp"
#include "abscreen/verdict.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace abscreen::gateway {

struct BackendConfig {
    std::string endpoint_url;
    std::string model_id;
    double temperature = 0.2;
    int max_tokens = 5;
    std::chrono::milliseconds request_timeout{30000};
    std::optional<std::pair<std::string, std::string>> special_token_wrap;
    /// Name of the environment variable holding the API key. Empty means the
    /// endpoint needs no credentials. The key itself is never stored.
    std::string credentials_env_var;
    /// Extra request headers (non-secret), e.g. {"api-version": "..."}.
    std::map<std::string, std::string> extra_headers;

    void validate() const;
};

BackendConfig backend_config_from_json(const std::string& text);
BackendConfig load_backend_config(const std::string& path);

struct RetryPolicy {
    int max_attempts = 5;
    std::chrono::milliseconds base_delay{1000};
    double multiplier = 2.0;
    std::chrono::milliseconds max_delay{60000};
    double jitter_fraction = 0.0;

    void validate() const;
};

enum class CompletionStatus {
    Ok,
    TransportError,
    RateLimited,
    ContentViolation,
    InvalidOutput,
};

const char* to_string(CompletionStatus s);
CompletionStatus completion_status_from_string(const std::string& s);

struct CompletionOutcome {
    CompletionStatus status = CompletionStatus::TransportError;
    std::optional<std::string> raw_text;
    int attempts = 0;
    std::chrono::milliseconds latency{0};

    bool ok() const { return status == CompletionStatus::Ok; }
};

/// One raw request to a completion endpoint. Implementations: HTTP chat
/// backend, test fakes.
class Transport {
public:
    virtual ~Transport() = default;
    virtual CompletionOutcome complete(const std::string& prompt) = 0;
};

/// Deterministic part of the backoff schedule: delay before retry
/// (retry_index = 1 for the first retry), exponential in the index and
/// capped at max_delay.
std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry_index);

/// Jittered variant; `unit` is a uniform sample in [-1, 1].
std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry_index, double unit);

/// Issue the prompt with retries: transport errors and rate limits retry
/// with exponential backoff; Ok and ContentViolation return immediately.
/// After max_attempts the final non-Ok outcome is returned with
/// attempts = max_attempts. `jitter_unit` supplies uniform [-1,1] samples
/// (defaulted to zero-jitter when the policy's jitter_fraction is 0).
CompletionOutcome complete_with_retry(Transport& transport, const RetryPolicy& policy,
                                      const std::string& prompt, Clock& clock,
                                      const std::function<double()>& jitter_unit = nullptr);

/// The include-on-failure policy: interpretable Ok outcomes keep their
/// parsed verdict; everything else (uninterpretable text, content
/// violations, exhausted retries) becomes Include with the fallback flag
/// set. Never returns Uninterpretable.
std::pair<protocol::Verdict, bool> apply_include_fallback(const CompletionOutcome& outcome);

} // namespace abscreen::gateway
