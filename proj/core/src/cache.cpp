#include "abscreen/cache.hpp"

#include "abscreen/digest.hpp"
#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace abscreen::gateway {

using nlohmann::json;

namespace {
constexpr const char* kFormat = "abscreen.cache";
constexpr int kVersion = 1;

std::string entry_checksum(const CacheEntry& e) {
    std::string material = e.key;
    material.push_back('\x1f');
    material += to_string(e.status);
    material.push_back('\x1f');
    material += e.raw_text ? "1" + *e.raw_text : "0";
    material.push_back('\x1f');
    material += std::to_string(e.attempts);
    material.push_back('\x1f');
    material += e.recorded_at;
    return digest::sha256_hex(material).substr(0, 16);
}

std::string entry_line(const CacheEntry& e) {
    json j;
    j["key"] = e.key;
    j["status"] = to_string(e.status);
    if (e.raw_text)
        j["raw_text"] = *e.raw_text;
    j["attempts"] = e.attempts;
    j["recorded_at"] = e.recorded_at;
    j["checksum"] = entry_checksum(e);
    return j.dump();
}

} // namespace

CacheMode cache_mode_from_string(const std::string& s) {
    const std::string m = util::to_lower(util::trim(s));
    if (m == "live")
        return CacheMode::Live;
    if (m == "replay")
        return CacheMode::Replay;
    if (m == "record-replay" || m == "record_replay" || m == "record")
        return CacheMode::RecordReplay;
    throw Error(ErrorCode::ConfigError, "unknown cache mode '" + s + "'");
}

const char* to_string(CacheMode mode) {
    switch (mode) {
    case CacheMode::Live: return "live";
    case CacheMode::Replay: return "replay";
    case CacheMode::RecordReplay: return "record-replay";
    }
    return "live";
}

std::string cache_key(const CacheKeyInputs& inputs) {
    std::string material = inputs.model_id;
    material.push_back('\x1f');
    material += inputs.prompt;
    material.push_back('\x1f');
    {
        std::ostringstream t;
        t << inputs.temperature;
        material += t.str();
    }
    material.push_back('\x1f');
    material += std::to_string(inputs.max_tokens);
    return digest::sha256_hex(material);
}

CompletionOutcome CacheEntry::to_outcome() const {
    CompletionOutcome out;
    out.status = status;
    out.raw_text = raw_text;
    out.attempts = attempts;
    out.latency = std::chrono::milliseconds(0);
    return out;
}

CompletionCache::CompletionCache(CompletionCache&& other) noexcept {
    std::lock_guard lock(other.mutex_);
    path_ = std::move(other.path_);
    entries_ = std::move(other.entries_);
    dropped_partial_ = other.dropped_partial_;
}

CompletionCache& CompletionCache::operator=(CompletionCache&& other) noexcept {
    if (this != &other) {
        std::scoped_lock lock(mutex_, other.mutex_);
        path_ = std::move(other.path_);
        entries_ = std::move(other.entries_);
        dropped_partial_ = other.dropped_partial_;
    }
    return *this;
}

CompletionCache CompletionCache::open(const std::string& path) {
    CompletionCache cache;
    cache.path_ = path;

    if (!std::filesystem::exists(path)) {
        json header;
        header["format"] = kFormat;
        header["version"] = kVersion;
        util::write_file(path, header.dump() + "\n");
        return cache;
    }

    const std::string text = util::read_file(path);
    std::istringstream in(text);
    std::string line;
    bool first = true;
    int line_no = 0;
    const bool ends_with_newline = !text.empty() && text.back() == '\n';
    while (std::getline(in, line)) {
        ++line_no;
        const bool last_line = in.peek() == EOF;
        if (util::trim(line).empty())
            continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) {
            // A torn final line from an interrupted run is dropped; anything
            // else is real corruption.
            if (last_line && !ends_with_newline) {
                ++cache.dropped_partial_;
                break;
            }
            throw Error(ErrorCode::CorruptCache,
                        path + " line " + std::to_string(line_no) + ": unparseable entry");
        }
        if (first) {
            first = false;
            if (j.value("format", "") != kFormat)
                throw Error(ErrorCode::CorruptCache, path + ": missing cache header");
            if (j.value("version", -1) != kVersion)
                throw Error(ErrorCode::CorruptCache,
                            path + ": unsupported cache version " +
                                std::to_string(j.value("version", -1)));
            continue;
        }
        CacheEntry e;
        try {
            e.key = j.at("key").get<std::string>();
            e.status = completion_status_from_string(j.at("status").get<std::string>());
            if (j.contains("raw_text"))
                e.raw_text = j["raw_text"].get<std::string>();
            e.attempts = j.at("attempts").get<int>();
            e.recorded_at = j.at("recorded_at").get<std::string>();
        } catch (const json::exception& ex) {
            throw Error(ErrorCode::CorruptCache,
                        path + " line " + std::to_string(line_no) + ": " + ex.what());
        }
        if (j.value("checksum", "") != entry_checksum(e))
            throw Error(ErrorCode::CorruptCache,
                        path + " line " + std::to_string(line_no) + ": checksum mismatch");
        cache.entries_.emplace(e.key, std::move(e));
    }
    return cache;
}

std::optional<CacheEntry> CompletionCache::find(const std::string& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void CompletionCache::put(const CacheEntry& entry) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(entry.key, entry);
    if (!inserted)
        return;
    if (path_.empty())
        return;
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out)
        throw Error(ErrorCode::IoError, "cannot append to cache " + path_);
    out << entry_line(entry) << "\n";
    out.flush();
    if (!out)
        throw Error(ErrorCode::IoError, "short write to cache " + path_);
}

std::size_t CompletionCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

ReplayResult replay_complete(CompletionCache& cache, CacheMode mode,
                             const CacheKeyInputs& inputs,
                             const std::function<CompletionOutcome()>& fetch,
                             const std::function<std::string()>& timestamp) {
    if (mode == CacheMode::Live) {
        ReplayResult r;
        r.outcome = fetch();
        return r;
    }
    const std::string key = cache_key(inputs);
    if (auto hit = cache.find(key)) {
        return {hit->to_outcome(), true, hit->recorded_at};
    }
    if (mode == CacheMode::Replay)
        throw Error(ErrorCode::CacheMiss, "no cache entry for key " + key.substr(0, 12) + "...");

    CacheEntry e;
    e.key = key;
    const CompletionOutcome outcome = fetch();
    e.status = outcome.status;
    e.raw_text = outcome.raw_text;
    e.attempts = outcome.attempts;
    e.recorded_at = timestamp ? timestamp() : util::now_iso8601_utc();
    cache.put(e);
    return {outcome, false, e.recorded_at};
}

} // namespace abscreen::gateway
