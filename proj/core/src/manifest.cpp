#include "abscreen/manifest.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

namespace abscreen {

using nlohmann::json;

std::string manifest_to_json(const RunManifest& m) {
    json j;
    j["tool_version"] = m.tool_version;
    j["subcommand"] = m.subcommand;
    j["flags"] = m.flags;
    j["config_digest"] = m.config_digest ? json(*m.config_digest) : json(nullptr);
    j["prompt_file_digest"] = m.prompt_file_digest ? json(*m.prompt_file_digest) : json(nullptr);
    j["corpus_digest"] = m.corpus_digest ? json(*m.corpus_digest) : json(nullptr);
    j["input_digests"] = m.input_digests;
    j["started_at"] = m.started_at;
    j["finished_at"] = m.finished_at;
    return j.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidFormat, std::string("manifest: ") + e.what());
    }
    RunManifest m;
    m.tool_version = j.value("tool_version", "");
    m.subcommand = j.value("subcommand", "");
    if (j.contains("flags"))
        m.flags = j["flags"].get<std::map<std::string, std::string>>();
    if (j.contains("config_digest") && !j["config_digest"].is_null())
        m.config_digest = j["config_digest"].get<std::string>();
    if (j.contains("prompt_file_digest") && !j["prompt_file_digest"].is_null())
        m.prompt_file_digest = j["prompt_file_digest"].get<std::string>();
    if (j.contains("corpus_digest") && !j["corpus_digest"].is_null())
        m.corpus_digest = j["corpus_digest"].get<std::string>();
    if (j.contains("input_digests"))
        m.input_digests = j["input_digests"].get<std::map<std::string, std::string>>();
    m.started_at = j.value("started_at", "");
    m.finished_at = j.value("finished_at", "");
    return m;
}

void save_manifest(const std::string& path, const RunManifest& manifest) {
    util::write_file(path, manifest_to_json(manifest));
}

} // namespace abscreen
