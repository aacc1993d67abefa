#pragma once

#include <stdexcept>
#include <string>

namespace abscreen {

enum class ErrorCode {
    MalformedRecord,
    MissingTitle,
    InsufficientExcludes,
    MissingAbstract,
    ConfigError,
    CacheMiss,
    CorruptCache,
    DuplicateTrial,
    UnknownRecord,
    MalformedVerdict,
    MissingDecision,
    RecordSetMismatch,
    DegenerateVariance,
    InvalidFormat,
    IoError,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-checkable code plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace abscreen
