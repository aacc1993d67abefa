#pragma once

#include "abscreen/protocol.hpp"
#include "abscreen/record.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace abscreen::protocol {

/// The prompt ladder, ordered by increasing pressure towards inclusion.
/// TitleOnly is the control level that sees no abstract.
enum class BiasLevel {
    TitleOnly = 0,
    None,
    Mild,
    Moderate,
    Heavy,
    Extreme,
};

inline constexpr std::array<BiasLevel, 6> kAllBiasLevels = {
    BiasLevel::TitleOnly, BiasLevel::None,  BiasLevel::Mild,
    BiasLevel::Moderate,  BiasLevel::Heavy, BiasLevel::Extreme,
};

const char* to_string(BiasLevel level);
BiasLevel bias_level_from_string(const std::string& name);

enum class PromptDialect {
    Plain,
    SpecialTokenWrapped,
};

/// One template of the ladder. Placeholders: {review_title},
/// {inclusion_list}, {exclusion_list}, {record_title}, {record_abstract}.
struct PromptSpec {
    BiasLevel bias = BiasLevel::None;
    std::string template_text;
    PromptDialect dialect = PromptDialect::Plain;
};

/// The six templates loaded from a plain-text prompt file with
/// "=== <bias-level> ===" section headers. The file checksum is kept for
/// audit manifests.
class PromptLibrary {
public:
    static PromptLibrary from_text(const std::string& text);
    static PromptLibrary load(const std::string& path);

    const std::string& template_for(BiasLevel level) const;
    PromptSpec spec(BiasLevel level, PromptDialect dialect = PromptDialect::Plain) const;
    const std::string& checksum() const { return checksum_; }

private:
    std::map<BiasLevel, std::string> templates_;
    std::string checksum_;
};

/// Substitute every placeholder. Criteria lists are rendered as numbered
/// lines. SpecialTokenWrapped output is enclosed in `wrap` (begin, end);
/// that dialect requires wrap to be present. Throws MissingAbstract when a
/// non-TitleOnly spec meets a record without an abstract.
std::string render_prompt(const PromptSpec& spec, const ReviewProtocol& protocol,
                          const corpus::Record& record,
                          const std::optional<std::pair<std::string, std::string>>& wrap =
                              std::nullopt);

} // namespace abscreen::protocol
