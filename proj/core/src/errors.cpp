#include "abscreen/errors.hpp"

namespace abscreen {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedRecord: return "MalformedRecord";
    case ErrorCode::MissingTitle: return "MissingTitle";
    case ErrorCode::InsufficientExcludes: return "InsufficientExcludes";
    case ErrorCode::MissingAbstract: return "MissingAbstract";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::CacheMiss: return "CacheMiss";
    case ErrorCode::CorruptCache: return "CorruptCache";
    case ErrorCode::DuplicateTrial: return "DuplicateTrial";
    case ErrorCode::UnknownRecord: return "UnknownRecord";
    case ErrorCode::MalformedVerdict: return "MalformedVerdict";
    case ErrorCode::MissingDecision: return "MissingDecision";
    case ErrorCode::RecordSetMismatch: return "RecordSetMismatch";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::InvalidFormat: return "InvalidFormat";
    case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace abscreen
