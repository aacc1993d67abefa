#include "abscreen/protocol.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

namespace abscreen::protocol {

using nlohmann::json;

void validate(const ReviewProtocol& protocol) {
    if (protocol.review_id.empty())
        throw Error(ErrorCode::ConfigError, "protocol review_id is empty");
    if (protocol.review_title.empty())
        throw Error(ErrorCode::ConfigError, "protocol review_title is empty");
    if (protocol.inclusion_criteria.empty())
        throw Error(ErrorCode::ConfigError,
                    "protocol " + protocol.review_id + " has no inclusion criteria");
}

ReviewProtocol protocol_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidFormat, std::string("protocol JSON: ") + e.what());
    }
    ReviewProtocol p;
    try {
        p.review_id = j.at("review_id").get<std::string>();
        p.review_title = j.at("review_title").get<std::string>();
        p.inclusion_criteria = j.at("inclusion_criteria").get<std::vector<std::string>>();
        p.exclusion_criteria = j.at("exclusion_criteria").get<std::vector<std::string>>();
        p.search_year = j.at("search_year").get<int>();
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidFormat, std::string("protocol JSON: ") + e.what());
    }
    validate(p);
    return p;
}

std::string protocol_to_json(const ReviewProtocol& protocol) {
    json j;
    j["review_id"] = protocol.review_id;
    j["review_title"] = protocol.review_title;
    j["inclusion_criteria"] = protocol.inclusion_criteria;
    j["exclusion_criteria"] = protocol.exclusion_criteria;
    j["search_year"] = protocol.search_year;
    return j.dump(2) + "\n";
}

ReviewProtocol load_protocol(const std::string& path) {
    return protocol_from_json(util::read_file(path));
}

std::string numbered_list(const std::vector<std::string>& items) {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        out += std::to_string(i + 1);
        out += ". ";
        out += items[i];
        if (i + 1 < items.size())
            out += "\n";
    }
    return out;
}

} // namespace abscreen::protocol
