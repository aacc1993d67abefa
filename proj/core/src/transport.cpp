#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "abscreen/transport.hpp"

#include "abscreen/errors.hpp"

#include <json.hpp>

#include <cstdlib>

namespace abscreen::gateway {

using nlohmann::json;

namespace {

struct ParsedUrl {
    std::string scheme_host_port; // e.g. "https://host:443"
    std::string path;             // e.g. "/v1/chat/completions"
};

ParsedUrl split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw Error(ErrorCode::ConfigError, "malformed endpoint URL: " + url);
    const auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos)
        return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace

std::string chat_request_body(const BackendConfig& config, const std::string& prompt) {
    json body;
    body["model"] = config.model_id;
    body["messages"] = json::array({{{"role", "user"}, {"content", prompt}}});
    body["temperature"] = config.temperature;
    body["max_tokens"] = config.max_tokens;
    return body.dump();
}

CompletionOutcome interpret_chat_response(int http_status, const std::string& body) {
    CompletionOutcome out;
    if (http_status == 429) {
        out.status = CompletionStatus::RateLimited;
        return out;
    }
    json j = json::parse(body, nullptr, false);
    if (http_status == 200) {
        if (j.is_discarded() || !j.contains("choices") || !j["choices"].is_array() ||
            j["choices"].empty() || !j["choices"][0].is_object()) {
            out.status = CompletionStatus::TransportError;
            out.raw_text = body.substr(0, 200);
            return out;
        }
        const auto& choice = j["choices"][0];
        const std::string finish = choice.value("finish_reason", "");
        if (finish == "content_filter") {
            out.status = CompletionStatus::ContentViolation;
            return out;
        }
        if (!choice.contains("message") || !choice["message"].is_object()) {
            out.status = CompletionStatus::TransportError;
            out.raw_text = body.substr(0, 200);
            return out;
        }
        out.status = CompletionStatus::Ok;
        out.raw_text = choice["message"].value("content", "");
        return out;
    }
    // Content-policy rejections are deterministic and must not be retried.
    if (!j.is_discarded() && j.contains("error")) {
        const std::string code = j["error"].value("code", "");
        const std::string type = j["error"].value("type", "");
        if (code.find("content") != std::string::npos ||
            type.find("content") != std::string::npos) {
            out.status = CompletionStatus::ContentViolation;
            out.raw_text = j["error"].value("message", "");
            return out;
        }
    }
    out.status = CompletionStatus::TransportError;
    out.raw_text = body.substr(0, 200);
    return out;
}

struct HttpTransport::Impl {
    BackendConfig config;
    ParsedUrl url;
    std::string api_key;
};

HttpTransport::HttpTransport(BackendConfig config) : impl_(std::make_unique<Impl>()) {
    config.validate();
    if (config.endpoint_url.empty())
        throw Error(ErrorCode::ConfigError, "live backend requires endpoint_url");
    impl_->url = split_url(config.endpoint_url);
    if (!config.credentials_env_var.empty()) {
        const char* key = std::getenv(config.credentials_env_var.c_str());
        if (!key || !*key)
            throw Error(ErrorCode::ConfigError,
                        "credentials environment variable " + config.credentials_env_var +
                            " is not set");
        impl_->api_key = key;
    }
    impl_->config = std::move(config);
}

HttpTransport::~HttpTransport() = default;

CompletionOutcome HttpTransport::complete(const std::string& prompt) {
    const auto& cfg = impl_->config;
    httplib::Client client(impl_->url.scheme_host_port);
    const auto timeout_s = std::chrono::duration_cast<std::chrono::seconds>(cfg.request_timeout);
    client.set_connection_timeout(timeout_s.count(), 0);
    client.set_read_timeout(timeout_s.count(), 0);
    client.set_write_timeout(timeout_s.count(), 0);

    httplib::Headers headers;
    if (!impl_->api_key.empty())
        headers.emplace("Authorization", "Bearer " + impl_->api_key);
    for (const auto& [name, value] : cfg.extra_headers)
        headers.emplace(name, value);

    auto res = client.Post(impl_->url.path, headers, chat_request_body(cfg, prompt),
                           "application/json");
    if (!res) {
        CompletionOutcome out;
        out.status = CompletionStatus::TransportError;
        out.raw_text = "transport: " + httplib::to_string(res.error());
        return out;
    }
    return interpret_chat_response(res->status, res->body);
}

} // namespace abscreen::gateway
