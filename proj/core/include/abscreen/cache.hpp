#pragma once

#include "abscreen/gateway.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>

namespace abscreen::gateway {

enum class CacheMode {
    Live,         // no cache at all
    Replay,       // cache only; a miss is an error
    RecordReplay, // hit from cache, record misses from the live backend
};

CacheMode cache_mode_from_string(const std::string& s);
const char* to_string(CacheMode mode);

struct CacheKeyInputs {
    std::string model_id;
    std::string prompt; // final rendered prompt, wrapping included
    double temperature;
    int max_tokens;
};

/// Referentially transparent cache key: identical inputs yield identical
/// keys on every platform.
std::string cache_key(const CacheKeyInputs& inputs);

struct CacheEntry {
    std::string key;
    CompletionStatus status = CompletionStatus::TransportError;
    std::optional<std::string> raw_text;
    int attempts = 0;
    std::string recorded_at; // ISO-8601 UTC

    CompletionOutcome to_outcome() const;
};

/// Append-only completion cache persisted as line-delimited JSON with a
/// version header. One entry per key (first write wins); each line carries
/// a checksum verified on load (mismatch -> CorruptCache). A trailing
/// partial line from an interrupted run is dropped with a warning count.
class CompletionCache {
public:
    /// In-memory cache, no backing file.
    CompletionCache() = default;

    /// Open or create `path`. Existing entries are loaded eagerly.
    static CompletionCache open(const std::string& path);

    std::optional<CacheEntry> find(const std::string& key) const;

    /// Insert and persist. Re-inserting an existing key is a no-op (entries
    /// are immutable once written).
    void put(const CacheEntry& entry);

    std::size_t size() const;
    int dropped_partial_lines() const { return dropped_partial_; }

private:
    std::string path_; // empty for in-memory
    std::map<std::string, CacheEntry> entries_;
    int dropped_partial_ = 0;
    mutable std::mutex mutex_;

public:
    CompletionCache(CompletionCache&& other) noexcept;
    CompletionCache& operator=(CompletionCache&& other) noexcept;
};

struct ReplayResult {
    CompletionOutcome outcome;
    bool from_cache = false;
    /// The cache entry's recorded_at (for hits and fresh recordings). Used
    /// downstream so replayed runs carry reproducible timestamps.
    std::string recorded_at;
};

/// Resolve a completion through the cache according to `mode`. In Replay
/// mode a miss throws CacheMiss. In RecordReplay mode misses are fetched
/// via `fetch` and persisted before returning.
ReplayResult replay_complete(CompletionCache& cache, CacheMode mode,
                             const CacheKeyInputs& inputs,
                             const std::function<CompletionOutcome()>& fetch,
                             const std::function<std::string()>& timestamp);

} // namespace abscreen::gateway
