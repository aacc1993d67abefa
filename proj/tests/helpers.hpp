#pragma once

#include "abscreen/engine.hpp"
#include "abscreen/gateway.hpp"
#include "abscreen/record.hpp"
#include "abscreen/store.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace testutil {

using namespace abscreen;

/// Replays a fixed sequence of outcomes; repeats the last one when
/// exhausted. Counts invocations.
class ScriptedTransport final : public gateway::Transport {
public:
    explicit ScriptedTransport(std::vector<gateway::CompletionOutcome> script)
        : script_(std::move(script)) {}

    gateway::CompletionOutcome complete(const std::string&) override {
        ++calls_;
        const std::size_t i = std::min(next_++, script_.size() - 1);
        return script_[i];
    }

    int calls() const { return calls_; }
    void reset() { next_ = 0; }

private:
    std::vector<gateway::CompletionOutcome> script_;
    std::size_t next_ = 0;
    int calls_ = 0;
};

inline gateway::CompletionOutcome ok_outcome(const std::string& text) {
    gateway::CompletionOutcome o;
    o.status = gateway::CompletionStatus::Ok;
    o.raw_text = text;
    o.attempts = 1;
    return o;
}

inline gateway::CompletionOutcome status_outcome(gateway::CompletionStatus s) {
    gateway::CompletionOutcome o;
    o.status = s;
    o.attempts = 1;
    return o;
}

inline corpus::Record make_record(const std::string& id, const std::string& review,
                                  corpus::GroundTruth gt,
                                  const std::string& title_suffix = "") {
    corpus::Record r;
    r.record_id = id;
    r.review_id = review;
    r.title = "Record " + id + title_suffix;
    r.abstract = "Abstract for " + id;
    r.year = 2020;
    r.ground_truth = gt;
    return r;
}

/// n_pos positives then n_neg negatives, ids p0.., n0..
inline std::vector<corpus::Record> make_labelled_set(int n_pos, int n_neg,
                                                     const std::string& review = "rev") {
    std::vector<corpus::Record> records;
    for (int i = 0; i < n_pos; ++i)
        records.push_back(
            make_record("p" + std::to_string(i), review, corpus::GroundTruth::IncludedInReview));
    for (int i = 0; i < n_neg; ++i)
        records.push_back(
            make_record("n" + std::to_string(i), review, corpus::GroundTruth::ExcludedFromReview));
    return records;
}

inline engine::ScreeningDecision make_decision(const std::string& record_id,
                                               const engine::ScreeningSource& source,
                                               bool include) {
    engine::ScreeningDecision d;
    d.record_id = record_id;
    d.source = source;
    d.verdict = include ? protocol::Verdict::Include : protocol::Verdict::Exclude;
    d.attempts = 1;
    d.status = gateway::CompletionStatus::Ok;
    d.created_at = "2024-01-01T00:00:00Z";
    return d;
}

/// Decisions for `records`: include the first `include_pos` positives and
/// the first `include_neg` negatives (positives/negatives recognized by
/// ground truth), exclude the rest. Used to synthesize screeners with exact
/// confusion counts.
inline std::vector<engine::ScreeningDecision>
decisions_with_counts(const std::vector<corpus::Record>& records,
                      const engine::ScreeningSource& source, std::int64_t tp, std::int64_t fp) {
    std::vector<engine::ScreeningDecision> out;
    std::int64_t pos_seen = 0, neg_seen = 0;
    for (const auto& r : records) {
        const bool positive = r.ground_truth == corpus::GroundTruth::IncludedInReview;
        bool include;
        if (positive)
            include = pos_seen++ < tp;
        else
            include = neg_seen++ < fp;
        out.push_back(make_decision(r.record_id, source, include));
    }
    return out;
}

/// Unique scratch directory under the system temp dir, removed on
/// destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::mt19937_64 rng(std::random_device{}());
        dir_ = std::filesystem::temp_directory_path() /
               ("abscreen_" + tag + "_" + std::to_string(rng()));
        std::filesystem::create_directories(dir_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(dir_, ec);
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace testutil
