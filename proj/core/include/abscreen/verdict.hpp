#pragma once

#include <string>
#include <string_view>

namespace abscreen::protocol {

enum class Verdict {
    Include,
    Exclude,
    Uninterpretable,
};

const char* to_string(Verdict v);

/// Total, deterministic mapping from raw completion text to a verdict. The
/// first alphabetical token decides by prefix ("includ..." / "exclud...");
/// empty output, refusals, a leading token that is neither word, or text
/// containing both words all map to Uninterpretable.
Verdict parse_verdict(std::string_view raw);

} // namespace abscreen::protocol
