#include "common.hpp"

#include "abscreen/digest.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <set>
#include <sstream>

namespace abscreen::cli {

ManifestBuilder::ManifestBuilder(std::string subcommand) {
    manifest_.tool_version = ABSCREEN_VERSION;
    manifest_.subcommand = std::move(subcommand);
    manifest_.started_at = util::now_iso8601_utc();
}

void ManifestBuilder::flag(const std::string& name, const std::string& value) {
    manifest_.flags[name] = value;
}

void ManifestBuilder::flag(const std::string& name, long long value) {
    manifest_.flags[name] = std::to_string(value);
}

void ManifestBuilder::input(const std::string& path, const std::string& role) {
    const std::string digest = digest::sha256_file_hex(path);
    manifest_.input_digests[path] = digest;
    if (role == "config")
        manifest_.config_digest = digest;
    else if (role == "prompt_file")
        manifest_.prompt_file_digest = digest;
    else if (role == "corpus")
        manifest_.corpus_digest = digest;
}

void ManifestBuilder::write(const std::string& out_path) {
    manifest_.finished_at = util::now_iso8601_utc();
    save_manifest(out_path + ".manifest.json", manifest_);
}

std::vector<corpus::Record> load_active_corpus(const std::string& path) {
    return corpus::active_records(corpus::load_corpus(path));
}

std::map<std::string, protocol::ReviewProtocol>
load_protocols(const std::vector<std::string>& paths) {
    std::map<std::string, protocol::ReviewProtocol> protocols;
    for (const auto& path : paths) {
        protocol::ReviewProtocol p = protocol::load_protocol(path);
        if (!protocols.emplace(p.review_id, p).second)
            throw Error(ErrorCode::ConfigError,
                        "duplicate protocol for review '" + p.review_id + "' (" + path + ")");
    }
    return protocols;
}

std::vector<engine::ScreeningSource> resolve_sources(const std::string& spec,
                                                     const std::vector<std::string>& store_keys) {
    std::vector<engine::ScreeningSource> sources;
    if (spec.empty() || spec == "all") {
        for (const auto& key : store_keys)
            sources.push_back(engine::ScreeningSource::parse(key));
        return sources;
    }
    std::set<std::string> seen;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = util::trim(item);
        if (item.empty())
            continue;
        if (!seen.insert(item).second)
            throw Error(ErrorCode::ConfigError, "source '" + item + "' listed twice");
        sources.push_back(engine::ScreeningSource::parse(item));
    }
    if (sources.empty())
        throw Error(ErrorCode::ConfigError, "no sources given");
    return sources;
}

} // namespace abscreen::cli
