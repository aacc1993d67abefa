#pragma once

#include "abscreen/gateway.hpp"

#include <memory>
#include <string>

namespace abscreen::gateway {

/// Chat-completion HTTP transport. One POST per call with the JSON body
/// {model, messages:[{role:"user", content}], temperature, max_tokens};
/// the reply text is the first choice's message content. Credentials are
/// resolved from the configured environment variable at construction and
/// sent as a bearer token. Fails fast with ConfigError on a malformed URL
/// or unresolvable credentials.
class HttpTransport final : public Transport {
public:
    explicit HttpTransport(BackendConfig config);
    ~HttpTransport() override;

    CompletionOutcome complete(const std::string& prompt) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Build the request body sent by HttpTransport (exposed for tests).
std::string chat_request_body(const BackendConfig& config, const std::string& prompt);

/// Interpret a chat-completion HTTP reply (exposed for tests). Maps
/// status 200 to Ok (or ContentViolation when the finish reason is a
/// content filter), 429 to RateLimited, content-policy 400s to
/// ContentViolation, and everything else to TransportError.
CompletionOutcome interpret_chat_response(int http_status, const std::string& body);

} // namespace abscreen::gateway
