#include "abscreen/engine.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <algorithm>
#include <future>

namespace abscreen::engine {

namespace {

/// Acquires a rate-limit token before every outbound request.
class RateLimitedTransport final : public gateway::Transport {
public:
    RateLimitedTransport(gateway::Transport& inner, gateway::TokenBucket& bucket)
        : inner_(inner), bucket_(bucket) {}

    gateway::CompletionOutcome complete(const std::string& prompt) override {
        bucket_.acquire();
        return inner_.complete(prompt);
    }

private:
    gateway::Transport& inner_;
    gateway::TokenBucket& bucket_;
};

gateway::CompletionOutcome live_completion(gateway::Transport& transport,
                                           ScreeningBackend& backend,
                                           const std::string& prompt,
                                           int invalid_output_retries) {
    auto& clock = *backend.clock;
    gateway::CompletionOutcome outcome =
        gateway::complete_with_retry(transport, backend.retry, prompt, clock);
    int total_attempts = outcome.attempts;

    // An interpretable failure is re-queried before the fallback applies.
    int requeries = 0;
    while (outcome.ok() && outcome.raw_text &&
           protocol::parse_verdict(*outcome.raw_text) == protocol::Verdict::Uninterpretable &&
           requeries < invalid_output_retries) {
        ++requeries;
        outcome = gateway::complete_with_retry(transport, backend.retry, prompt, clock);
        total_attempts += outcome.attempts;
    }
    if (outcome.ok() && outcome.raw_text &&
        protocol::parse_verdict(*outcome.raw_text) == protocol::Verdict::Uninterpretable)
        outcome.status = gateway::CompletionStatus::InvalidOutput;
    outcome.attempts = total_attempts;
    return outcome;
}

ScreeningDecision screen_one(const corpus::Record& record,
                             const protocol::ReviewProtocol& review_protocol,
                             const protocol::PromptSpec& prompt_spec,
                             ScreeningBackend& backend, const ScreeningSource& source,
                             const RunOptions& options) {
    const std::string prompt = protocol::render_prompt(prompt_spec, review_protocol, record,
                                                       backend.config.special_token_wrap);

    auto fetch = [&]() -> gateway::CompletionOutcome {
        if (!backend.transport)
            throw Error(ErrorCode::ConfigError,
                        "no transport configured but a live completion is required");
        if (backend.limiter) {
            RateLimitedTransport limited(*backend.transport, *backend.limiter);
            return live_completion(limited, backend, prompt, options.invalid_output_retries);
        }
        return live_completion(*backend.transport, backend, prompt,
                               options.invalid_output_retries);
    };

    gateway::ReplayResult result;
    if (backend.cache && backend.cache_mode != gateway::CacheMode::Live) {
        result = gateway::replay_complete(
            *backend.cache, backend.cache_mode,
            gateway::CacheKeyInputs{backend.config.model_id, prompt,
                                    backend.config.temperature, backend.config.max_tokens},
            fetch, nullptr);
    } else {
        result.outcome = fetch();
    }

    const auto [verdict, fallback] = gateway::apply_include_fallback(result.outcome);

    ScreeningDecision d;
    d.record_id = record.record_id;
    d.source = source;
    d.verdict = verdict;
    d.raw_text = result.outcome.raw_text;
    d.fallback = fallback;
    d.attempts = result.outcome.attempts;
    d.status = result.outcome.status;
    // Cached completions carry the recording timestamp so replayed stores
    // are byte-reproducible.
    d.created_at = result.recorded_at.empty() ? util::now_iso8601_utc() : result.recorded_at;
    return d;
}

RunSummary summarize(const std::vector<corpus::Record>& records, const ScreeningSource& source,
                     const DecisionStore& store, std::size_t newly_decided) {
    RunSummary summary;
    summary.total_records = records.size();
    summary.newly_decided = newly_decided;
    for (const auto& r : records) {
        const auto d = store.find(r.record_id, source);
        if (!d)
            continue;
        if (d->verdict == protocol::Verdict::Include)
            ++summary.includes;
        else
            ++summary.excludes;
        if (d->fallback)
            ++summary.fallbacks;
        ++summary.status_counts[gateway::to_string(d->status)];
        if (d->status != gateway::CompletionStatus::Ok)
            ++summary.errors;
    }
    return summary;
}

void check_unique_record_ids(const std::vector<corpus::Record>& records) {
    std::set<std::string> ids;
    for (const auto& r : records)
        if (!ids.insert(r.record_id).second)
            throw Error(ErrorCode::InvalidFormat,
                        "record set contains duplicate record_id '" + r.record_id + "'");
}

} // namespace

RunSummary run_screening(const std::vector<corpus::Record>& records,
                         const std::map<std::string, protocol::ReviewProtocol>& protocols,
                         const protocol::PromptSpec& prompt_spec, ScreeningBackend& backend,
                         DecisionStore& store, const RunOptions& options) {
    backend.config.validate();
    backend.retry.validate();
    if (!backend.clock)
        backend.clock = gateway::system_clock();
    if (options.concurrency < 1)
        throw Error(ErrorCode::ConfigError, "concurrency must be >= 1");
    check_unique_record_ids(records);

    const ScreeningSource source =
        ScreeningSource::model(backend.config.model_id, prompt_spec.bias, options.trial_index);

    // Fail fast on unknown reviews before touching the network or store.
    for (const auto& r : records)
        if (!protocols.count(r.review_id))
            throw Error(ErrorCode::ConfigError,
                        "no protocol for review '" + r.review_id + "' (record " + r.record_id +
                            ")");

    std::vector<const corpus::Record*> todo;
    for (const auto& r : records)
        if (!store.contains(r.record_id, source))
            todo.push_back(&r);

    const auto chunk_size = static_cast<std::size_t>(options.concurrency);
    std::size_t written = 0;
    for (std::size_t base = 0; base < todo.size(); base += chunk_size) {
        const std::size_t end = std::min(base + chunk_size, todo.size());
        std::vector<std::future<ScreeningDecision>> futures;
        futures.reserve(end - base);
        for (std::size_t i = base; i < end; ++i) {
            const corpus::Record* rec = todo[i];
            const auto& review_protocol = protocols.at(rec->review_id);
            if (options.concurrency == 1) {
                // Run inline; keeps single-threaded runs easy to debug.
                std::promise<ScreeningDecision> p;
                p.set_value(
                    screen_one(*rec, review_protocol, prompt_spec, backend, source, options));
                futures.push_back(p.get_future());
            } else {
                futures.push_back(std::async(std::launch::async, [&, rec] {
                    return screen_one(*rec, review_protocol, prompt_spec, backend, source,
                                      options);
                }));
            }
        }
        // Input-order appends keep the store deterministic under any
        // concurrency level.
        for (auto& f : futures) {
            store.append(f.get());
            ++written;
        }
    }

    return summarize(records, source, store, written);
}

RunSummary run_repeat_trial(const std::vector<corpus::Record>& records,
                            const std::map<std::string, protocol::ReviewProtocol>& protocols,
                            const protocol::PromptSpec& prompt_spec, ScreeningBackend& backend,
                            DecisionStore& store, int trial_index, const RunOptions& options) {
    const ScreeningSource source =
        ScreeningSource::model(backend.config.model_id, prompt_spec.bias, trial_index);
    const auto decided = store.decided_records(source);
    if (!records.empty() && decided.size() >= records.size()) {
        const bool complete = std::all_of(records.begin(), records.end(), [&](const auto& r) {
            return decided.count(r.record_id) > 0;
        });
        if (complete)
            throw Error(ErrorCode::DuplicateTrial,
                        "trial " + std::to_string(trial_index) + " for " + source.key() +
                            " already covers all " + std::to_string(records.size()) +
                            " records");
    }
    RunOptions trial_options = options;
    trial_options.trial_index = trial_index;
    return run_screening(records, protocols, prompt_spec, backend, store, trial_options);
}

ImportResult import_human_decisions(const std::string& csv_text, const std::string& screener_id,
                                    const std::vector<corpus::Record>& corpus,
                                    DecisionStore& store) {
    const ScreeningSource source = ScreeningSource::human(screener_id);
    std::set<std::string> known;
    for (const auto& r : corpus)
        known.insert(r.record_id);

    const auto rows = util::parse_csv(csv_text);
    if (rows.empty())
        throw Error(ErrorCode::InvalidFormat, "human decision CSV is empty");
    if (rows[0].size() < 2 || util::to_lower(util::trim(rows[0][0])) != "record_id" ||
        util::to_lower(util::trim(rows[0][1])) != "verdict")
        throw Error(ErrorCode::InvalidFormat,
                    "human decision CSV must start with header 'record_id,verdict'");

    ImportResult result;
    const std::string imported_at = util::now_iso8601_utc();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const int row_no = static_cast<int>(i) + 1;
        const auto& row = rows[i];
        if (row.size() < 2) {
            result.errors.push_back({row_no, "", "expected 2 columns"});
            continue;
        }
        const std::string record_id = util::trim(row[0]);
        const std::string verdict_text = util::to_lower(util::trim(row[1]));
        if (!known.count(record_id)) {
            result.errors.push_back(
                {row_no, record_id, "UnknownRecord: not present in the corpus"});
            continue;
        }
        if (store.contains(record_id, source)) {
            result.errors.push_back(
                {row_no, record_id, "duplicate decision for this screener"});
            continue;
        }
        protocol::Verdict verdict;
        if (verdict_text == "include")
            verdict = protocol::Verdict::Include;
        else if (verdict_text == "exclude")
            verdict = protocol::Verdict::Exclude;
        else {
            result.errors.push_back(
                {row_no, record_id, "MalformedVerdict: '" + util::trim(row[1]) + "'"});
            continue;
        }
        ScreeningDecision d;
        d.record_id = record_id;
        d.source = source;
        d.verdict = verdict;
        d.fallback = false;
        d.attempts = 0;
        d.status = gateway::CompletionStatus::Ok;
        d.created_at = imported_at;
        store.append(d);
        ++result.imported;
    }
    return result;
}

} // namespace abscreen::engine
