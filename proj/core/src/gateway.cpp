#include "abscreen/gateway.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <thread>

namespace abscreen::gateway {

using nlohmann::json;

std::chrono::milliseconds SystemClock::now() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now().time_since_epoch());
}

void SystemClock::sleep_for(std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
}

std::shared_ptr<Clock> system_clock() {
    static std::shared_ptr<Clock> instance = std::make_shared<SystemClock>();
    return instance;
}

void BackendConfig::validate() const {
    if (model_id.empty())
        throw Error(ErrorCode::ConfigError, "backend model_id is empty");
    if (temperature < 0)
        throw Error(ErrorCode::ConfigError, "temperature must be >= 0");
    if (max_tokens < 1)
        throw Error(ErrorCode::ConfigError, "max_tokens must be >= 1");
    if (!endpoint_url.empty() && endpoint_url.rfind("http://", 0) != 0 &&
        endpoint_url.rfind("https://", 0) != 0)
        throw Error(ErrorCode::ConfigError, "endpoint_url must be http(s): " + endpoint_url);
}

BackendConfig backend_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidFormat, std::string("backend config: ") + e.what());
    }
    BackendConfig cfg;
    cfg.endpoint_url = j.value("endpoint_url", "");
    cfg.model_id = j.value("model_id", "");
    cfg.temperature = j.value("temperature", 0.2);
    cfg.max_tokens = j.value("max_tokens", 5);
    cfg.request_timeout = std::chrono::milliseconds(j.value("request_timeout_ms", 30000));
    if (j.contains("special_token_wrap")) {
        const auto& w = j["special_token_wrap"];
        cfg.special_token_wrap = {w.at("begin").get<std::string>(),
                                  w.at("end").get<std::string>()};
    }
    cfg.credentials_env_var = j.value("credentials_env_var", "");
    if (j.contains("extra_headers"))
        cfg.extra_headers = j["extra_headers"].get<std::map<std::string, std::string>>();
    cfg.validate();
    return cfg;
}

BackendConfig load_backend_config(const std::string& path) {
    return backend_config_from_json(util::read_file(path));
}

void RetryPolicy::validate() const {
    if (max_attempts < 1)
        throw Error(ErrorCode::ConfigError, "max_attempts must be >= 1");
    if (multiplier < 1.0)
        throw Error(ErrorCode::ConfigError, "backoff multiplier must be >= 1");
    if (jitter_fraction < 0.0 || jitter_fraction > 1.0)
        throw Error(ErrorCode::ConfigError, "jitter_fraction must be in [0, 1]");
}

const char* to_string(CompletionStatus s) {
    switch (s) {
    case CompletionStatus::Ok: return "ok";
    case CompletionStatus::TransportError: return "transport_error";
    case CompletionStatus::RateLimited: return "rate_limited";
    case CompletionStatus::ContentViolation: return "content_violation";
    case CompletionStatus::InvalidOutput: return "invalid_output";
    }
    return "transport_error";
}

CompletionStatus completion_status_from_string(const std::string& s) {
    if (s == "ok")
        return CompletionStatus::Ok;
    if (s == "transport_error")
        return CompletionStatus::TransportError;
    if (s == "rate_limited")
        return CompletionStatus::RateLimited;
    if (s == "content_violation")
        return CompletionStatus::ContentViolation;
    if (s == "invalid_output")
        return CompletionStatus::InvalidOutput;
    throw Error(ErrorCode::InvalidFormat, "unknown completion status '" + s + "'");
}

std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry_index) {
    return backoff_delay(policy, retry_index, 0.0);
}

std::chrono::milliseconds backoff_delay(const RetryPolicy& policy, int retry_index, double unit) {
    const double base = static_cast<double>(policy.base_delay.count());
    const double cap = static_cast<double>(policy.max_delay.count());
    double delay = base * std::pow(policy.multiplier, retry_index - 1);
    delay = std::min(delay, cap);
    delay *= 1.0 + policy.jitter_fraction * unit;
    delay = std::max(0.0, std::min(delay, cap));
    return std::chrono::milliseconds(static_cast<long long>(std::llround(delay)));
}

CompletionOutcome complete_with_retry(Transport& transport, const RetryPolicy& policy,
                                      const std::string& prompt, Clock& clock,
                                      const std::function<double()>& jitter_unit) {
    policy.validate();
    if (prompt.empty())
        throw Error(ErrorCode::ConfigError, "prompt is empty");

    const auto start = clock.now();
    CompletionOutcome last;
    for (int attempt = 1; attempt <= policy.max_attempts; ++attempt) {
        if (attempt > 1) {
            const double unit =
                (policy.jitter_fraction > 0.0 && jitter_unit) ? jitter_unit() : 0.0;
            clock.sleep_for(backoff_delay(policy, attempt - 1, unit));
        }
        last = transport.complete(prompt);
        last.attempts = attempt;
        if (last.status == CompletionStatus::Ok ||
            last.status == CompletionStatus::ContentViolation)
            break;
    }
    last.latency = clock.now() - start;
    return last;
}

std::pair<protocol::Verdict, bool> apply_include_fallback(const CompletionOutcome& outcome) {
    using protocol::Verdict;
    if (outcome.ok() && outcome.raw_text) {
        const Verdict v = protocol::parse_verdict(*outcome.raw_text);
        if (v != Verdict::Uninterpretable)
            return {v, false};
    }
    return {Verdict::Include, true};
}

} // namespace abscreen::gateway
