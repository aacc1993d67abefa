#include "abscreen/prompt.hpp"

#include "abscreen/digest.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <sstream>
#include <vector>

namespace abscreen::protocol {

const char* to_string(BiasLevel level) {
    switch (level) {
    case BiasLevel::TitleOnly: return "title-only";
    case BiasLevel::None: return "none";
    case BiasLevel::Mild: return "mild";
    case BiasLevel::Moderate: return "moderate";
    case BiasLevel::Heavy: return "heavy";
    case BiasLevel::Extreme: return "extreme";
    }
    return "none";
}

BiasLevel bias_level_from_string(const std::string& name) {
    std::string n = util::to_lower(util::trim(name));
    for (char& c : n)
        if (c == '_' || c == ' ')
            c = '-';
    if (n == "title-only" || n == "titleonly")
        return BiasLevel::TitleOnly;
    if (n == "none")
        return BiasLevel::None;
    if (n == "mild")
        return BiasLevel::Mild;
    if (n == "moderate")
        return BiasLevel::Moderate;
    if (n == "heavy")
        return BiasLevel::Heavy;
    if (n == "extreme")
        return BiasLevel::Extreme;
    throw Error(ErrorCode::ConfigError, "unknown bias level '" + name + "'");
}

namespace {

constexpr const char* kPlaceholders[] = {
    "{review_title}", "{inclusion_list}", "{exclusion_list}",
    "{record_title}", "{record_abstract}",
};

size_t count_occurrences(const std::string& haystack, const std::string& needle) {
    size_t count = 0;
    for (size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

void validate_template(BiasLevel level, const std::string& text) {
    for (const char* ph : kPlaceholders) {
        const bool is_abstract = std::string(ph) == "{record_abstract}";
        const size_t n = count_occurrences(text, ph);
        if (level == BiasLevel::TitleOnly && is_abstract) {
            if (n != 0)
                throw Error(ErrorCode::ConfigError,
                            "title-only template must not contain {record_abstract}");
            continue;
        }
        if (n != 1)
            throw Error(ErrorCode::ConfigError,
                        std::string("template '") + to_string(level) + "' must contain " + ph +
                            " exactly once, found " + std::to_string(n));
    }
}

std::string replace_all(std::string text, const std::string& from, const std::string& to) {
    size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

} // namespace

PromptLibrary PromptLibrary::from_text(const std::string& text) {
    PromptLibrary lib;
    lib.checksum_ = digest::sha256_hex(text);

    std::istringstream in(text);
    std::string line;
    std::optional<BiasLevel> current;
    std::map<BiasLevel, std::vector<std::string>> lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const std::string t = util::trim(line);
        if (t.size() > 8 && t.substr(0, 4) == "=== " && t.substr(t.size() - 4) == " ===") {
            const std::string name = util::trim(t.substr(4, t.size() - 8));
            const BiasLevel level = bias_level_from_string(name);
            if (lines.count(level))
                throw Error(ErrorCode::ConfigError,
                            std::string("duplicate prompt section '") + name + "'");
            current = level;
            lines[level];
            continue;
        }
        if (current)
            lines[*current].push_back(line);
        // Preamble lines before the first section are ignored.
    }

    for (BiasLevel level : kAllBiasLevels) {
        auto it = lines.find(level);
        if (it == lines.end())
            throw Error(ErrorCode::ConfigError,
                        std::string("prompt file is missing section '") + to_string(level) + "'");
        auto& ls = it->second;
        while (!ls.empty() && util::trim(ls.front()).empty())
            ls.erase(ls.begin());
        while (!ls.empty() && util::trim(ls.back()).empty())
            ls.pop_back();
        std::string body;
        for (size_t i = 0; i < ls.size(); ++i) {
            body += ls[i];
            if (i + 1 < ls.size())
                body += "\n";
        }
        if (body.empty())
            throw Error(ErrorCode::ConfigError,
                        std::string("prompt section '") + to_string(level) + "' is empty");
        validate_template(level, body);
        lib.templates_[level] = std::move(body);
    }
    return lib;
}

PromptLibrary PromptLibrary::load(const std::string& path) {
    return from_text(util::read_file(path));
}

const std::string& PromptLibrary::template_for(BiasLevel level) const {
    return templates_.at(level);
}

PromptSpec PromptLibrary::spec(BiasLevel level, PromptDialect dialect) const {
    return PromptSpec{level, template_for(level), dialect};
}

std::string render_prompt(const PromptSpec& spec, const ReviewProtocol& protocol,
                          const corpus::Record& record,
                          const std::optional<std::pair<std::string, std::string>>& wrap) {
    if (record.title.empty())
        throw Error(ErrorCode::ConfigError,
                    "record " + record.record_id + " has an empty title");
    const bool needs_abstract = spec.bias != BiasLevel::TitleOnly;
    if (needs_abstract && !record.has_abstract())
        throw Error(ErrorCode::MissingAbstract,
                    "record " + record.record_id + " has no abstract and bias level '" +
                        to_string(spec.bias) + "' requires one");

    std::string text = spec.template_text;
    text = replace_all(text, "{review_title}", protocol.review_title);
    text = replace_all(text, "{inclusion_list}", numbered_list(protocol.inclusion_criteria));
    text = replace_all(text, "{exclusion_list}", numbered_list(protocol.exclusion_criteria));
    text = replace_all(text, "{record_title}", record.title);
    if (needs_abstract)
        text = replace_all(text, "{record_abstract}", *record.abstract);

    if (spec.dialect == PromptDialect::SpecialTokenWrapped) {
        if (!wrap)
            throw Error(ErrorCode::ConfigError,
                        "special-token dialect requested but no wrap tokens configured");
        text = wrap->first + text + wrap->second;
    }
    return text;
}

} // namespace abscreen::protocol
