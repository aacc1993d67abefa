#include "abscreen/ris.hpp"

#include "abscreen/util.hpp"

#include <cctype>

namespace abscreen::corpus {

std::optional<std::string> RecordDraft::first(const std::string& tag) const {
    for (const auto& [t, v] : raw_tags)
        if (t == tag)
            return v;
    return std::nullopt;
}

std::vector<std::string> RecordDraft::all(const std::string& tag) const {
    std::vector<std::string> out;
    for (const auto& [t, v] : raw_tags)
        if (t == tag)
            out.push_back(v);
    return out;
}

namespace {

bool is_tag_char(char c) {
    return std::isupper(static_cast<unsigned char>(c)) ||
           std::isdigit(static_cast<unsigned char>(c));
}

// "XX  - value" with a two-character tag code.
bool split_tag_line(std::string_view line, std::string& tag, std::string& value) {
    if (line.size() < 6)
        return false;
    if (!is_tag_char(line[0]) || !is_tag_char(line[1]))
        return false;
    if (line.substr(2, 4) != "  - ")
        return false;
    tag = std::string(line.substr(0, 2));
    value = util::trim(line.substr(6));
    return true;
}

// ER lines are often written without the trailing space ("ER  -").
bool is_bare_tag_line(std::string_view line, std::string& tag) {
    std::string t = util::trim(line);
    if (t.size() == 5 && is_tag_char(t[0]) && is_tag_char(t[1]) && t.substr(2) == "  -") {
        tag = t.substr(0, 2);
        return true;
    }
    return false;
}

} // namespace

RisParseResult parse_ris(std::string_view bytes, const std::string& source_file) {
    RisParseResult result;

    if (bytes.size() >= 3 && static_cast<unsigned char>(bytes[0]) == 0xEF &&
        static_cast<unsigned char>(bytes[1]) == 0xBB &&
        static_cast<unsigned char>(bytes[2]) == 0xBF)
        bytes.remove_prefix(3);

    RecordDraft draft;
    bool in_record = false;
    int line_no = 0;

    auto flush_truncated = [&](int end_line) {
        result.errors.push_back({draft.line_start, end_line,
                                 "record opened at line " + std::to_string(draft.line_start) +
                                     " has no ER terminator"});
        draft = RecordDraft{};
        in_record = false;
    };

    size_t pos = 0;
    while (pos <= bytes.size()) {
        if (pos == bytes.size() && pos != 0 && bytes[pos - 1] == '\n')
            break;
        size_t eol = bytes.find('\n', pos);
        std::string_view line = (eol == std::string_view::npos)
                                    ? bytes.substr(pos)
                                    : bytes.substr(pos, eol - pos);
        pos = (eol == std::string_view::npos) ? bytes.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);

        std::string tag, value;
        const bool tagged = split_tag_line(line, tag, value) || is_bare_tag_line(line, tag);

        if (!tagged) {
            if (in_record && !util::trim(line).empty() && !draft.raw_tags.empty()) {
                // Continuation line: extend the previous tag's value.
                auto& prev = draft.raw_tags.back().second;
                const std::string cont = util::trim(line);
                if (prev.empty())
                    prev = cont;
                else
                    prev += " " + cont;
                draft.line_end = line_no;
            }
            continue;
        }

        if (!in_record) {
            if (tag == "TY") {
                in_record = true;
                draft.source_file = source_file;
                draft.line_start = line_no;
                draft.line_end = line_no;
                draft.raw_tags.emplace_back(tag, value);
            } else if (tag == "ER") {
                result.errors.push_back(
                    {line_no, line_no, "ER at line " + std::to_string(line_no) + " without TY"});
            }
            // Other stray tags outside a record (export headers etc.) are skipped.
            continue;
        }

        if (tag == "TY") {
            // New record begins before the previous one was terminated.
            flush_truncated(line_no - 1);
            in_record = true;
            draft.source_file = source_file;
            draft.line_start = line_no;
            draft.line_end = line_no;
            draft.raw_tags.emplace_back(tag, value);
            continue;
        }

        draft.raw_tags.emplace_back(tag, value);
        draft.line_end = line_no;
        if (tag == "ER") {
            result.drafts.push_back(std::move(draft));
            draft = RecordDraft{};
            in_record = false;
        }
    }

    if (in_record)
        flush_truncated(line_no);

    return result;
}

std::string serialize_ris(const std::vector<RecordDraft>& drafts) {
    std::string out;
    for (const auto& draft : drafts) {
        for (const auto& [tag, value] : draft.raw_tags) {
            out += tag;
            out += "  - ";
            out += value;
            out += "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace abscreen::corpus
