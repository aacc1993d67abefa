#include "abscreen/verdict.hpp"

#include <cctype>
#include <vector>

namespace abscreen::protocol {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Include: return "include";
    case Verdict::Exclude: return "exclude";
    case Verdict::Uninterpretable: return "uninterpretable";
    }
    return "uninterpretable";
}

namespace {

bool has_prefix(const std::string& token, const char* prefix) {
    return token.rfind(prefix, 0) == 0;
}

} // namespace

Verdict parse_verdict(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : raw) {
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            current.push_back(
                static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else if (!current.empty()) {
            tokens.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));

    if (tokens.empty())
        return Verdict::Uninterpretable;

    const bool first_inc = has_prefix(tokens.front(), "includ");
    const bool first_exc = has_prefix(tokens.front(), "exclud");
    if (!first_inc && !first_exc)
        return Verdict::Uninterpretable;

    // A hedged output mentioning both words is not trusted.
    bool any_inc = false, any_exc = false;
    for (const auto& t : tokens) {
        any_inc = any_inc || has_prefix(t, "includ");
        any_exc = any_exc || has_prefix(t, "exclud");
    }
    if (any_inc && any_exc)
        return Verdict::Uninterpretable;

    return first_inc ? Verdict::Include : Verdict::Exclude;
}

} // namespace abscreen::protocol
