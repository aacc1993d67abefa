#pragma once

#include <string>
#include <vector>

namespace abscreen::protocol {

/// A review's screening knowledge source: title plus numbered inclusion and
/// exclusion criteria, and the year its search was run.
struct ReviewProtocol {
    std::string review_id;
    std::string review_title;
    std::vector<std::string> inclusion_criteria;
    std::vector<std::string> exclusion_criteria;
    int search_year = 0;
};

/// Validate invariants: non-empty review_id/title, at least one inclusion
/// criterion. Throws ConfigError.
void validate(const ReviewProtocol& protocol);

ReviewProtocol protocol_from_json(const std::string& text);
std::string protocol_to_json(const ReviewProtocol& protocol);
ReviewProtocol load_protocol(const std::string& path);

/// "1. ...\n2. ..." rendering used inside prompts.
std::string numbered_list(const std::vector<std::string>& items);

} // namespace abscreen::protocol
