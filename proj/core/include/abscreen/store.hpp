#pragma once

#include "abscreen/gateway.hpp"
#include "abscreen/source.hpp"
#include "abscreen/verdict.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace abscreen::engine {

/// One screening verdict with full provenance. Verdicts here are strictly
/// binary; uninterpretable outputs were already mapped by the
/// include-on-failure policy (fallback = true).
struct ScreeningDecision {
    std::string record_id;
    ScreeningSource source;
    protocol::Verdict verdict = protocol::Verdict::Include; // Include or Exclude only
    std::optional<std::string> raw_text;
    bool fallback = false;
    int attempts = 0;
    gateway::CompletionStatus status = gateway::CompletionStatus::Ok;
    std::string created_at; // ISO-8601 UTC
};

/// Append-only decision log persisted as line-delimited JSON with a version
/// header. (record_id, source) pairs are unique; reloading reproduces the
/// same in-memory state. Appends from one process are serialized.
class DecisionStore {
public:
    DecisionStore() = default;

    /// Open or create `path`; existing decisions are loaded eagerly.
    static DecisionStore open(const std::string& path);

    /// Append one decision. Throws InvalidFormat on a duplicate
    /// (record_id, source) key.
    void append(const ScreeningDecision& decision);

    bool contains(const std::string& record_id, const ScreeningSource& source) const;
    std::optional<ScreeningDecision> find(const std::string& record_id,
                                          const ScreeningSource& source) const;

    /// All decisions of one source, in insertion order.
    std::vector<ScreeningDecision> decisions_for(const ScreeningSource& source) const;

    /// Distinct source keys present, sorted.
    std::vector<std::string> source_keys() const;

    /// record_ids decided by `source`.
    std::set<std::string> decided_records(const ScreeningSource& source) const;

    std::size_t size() const;

    const std::string& path() const { return path_; }

    DecisionStore(DecisionStore&& other) noexcept;
    DecisionStore& operator=(DecisionStore&& other) noexcept;

private:
    std::string path_; // empty for in-memory
    std::vector<ScreeningDecision> decisions_;
    std::map<std::pair<std::string, std::string>, std::size_t> index_; // (record, source key)
    mutable std::mutex mutex_;

    void insert_loaded(ScreeningDecision decision, int line_no);
};

} // namespace abscreen::engine
