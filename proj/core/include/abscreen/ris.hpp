#pragma once

#include "abscreen/record.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace abscreen::corpus {

/// A block-level problem found while parsing; parsing continues with the
/// remaining blocks.
struct RisParseError {
    int line_start = 0;
    int line_end = 0;
    std::string message;
};

struct RisParseResult {
    std::vector<RecordDraft> drafts;
    std::vector<RisParseError> errors;
};

/// Parse a RIS byte stream (UTF-8, BOM tolerated). Tag lines look like
/// "XX  - value"; lines without a tag prefix continue the previous tag's
/// value and are joined with single spaces. Records run from TY to ER.
RisParseResult parse_ris(std::string_view bytes, const std::string& source_file = "");

/// Canonical serialization: one "XX  - value" line per tag, ER-terminated,
/// blank line between records. parse(serialize(parse(x))) is stable.
std::string serialize_ris(const std::vector<RecordDraft>& drafts);

} // namespace abscreen::corpus
