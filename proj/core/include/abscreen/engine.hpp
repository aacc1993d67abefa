#pragma once

#include "abscreen/cache.hpp"
#include "abscreen/gateway.hpp"
#include "abscreen/prompt.hpp"
#include "abscreen/protocol.hpp"
#include "abscreen/rate_limiter.hpp"
#include "abscreen/record.hpp"
#include "abscreen/store.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace abscreen::engine {

/// Everything needed to obtain one completion: transport (absent in pure
/// replay), cache, retry policy, clock and optional rate limiter.
struct ScreeningBackend {
    gateway::BackendConfig config;
    gateway::RetryPolicy retry;
    std::shared_ptr<gateway::Transport> transport;
    std::shared_ptr<gateway::CompletionCache> cache;
    gateway::CacheMode cache_mode = gateway::CacheMode::Live;
    std::shared_ptr<gateway::Clock> clock;
    std::shared_ptr<gateway::TokenBucket> limiter;
};

struct RunOptions {
    int trial_index = 1;
    /// Max in-flight requests; appends always happen in input order.
    int concurrency = 1;
    /// Re-queries after an interpretable-output failure before the
    /// include-on-failure policy kicks in.
    int invalid_output_retries = 1;
};

struct RunSummary {
    std::size_t total_records = 0;
    std::size_t newly_decided = 0;
    /// Counts over all decisions for (source, record set), prior runs
    /// included, so a resumed run reports the same totals.
    std::size_t includes = 0;
    std::size_t excludes = 0;
    std::size_t fallbacks = 0;
    std::size_t errors = 0; // decisions whose final status was not Ok
    std::map<std::string, std::size_t> status_counts;
};

/// Screen every record lacking a decision for this source; already-decided
/// records are skipped (resume semantics). Partial progress is persisted
/// decision by decision. Protocols are looked up by each record's
/// review_id.
RunSummary run_screening(const std::vector<corpus::Record>& records,
                         const std::map<std::string, protocol::ReviewProtocol>& protocols,
                         const protocol::PromptSpec& prompt_spec, ScreeningBackend& backend,
                         DecisionStore& store, const RunOptions& options = {});

/// A repeat trial writes an independent decision column for the same
/// (model, bias). Throws DuplicateTrial when that trial already covers the
/// whole record set; a partially complete trial resumes.
RunSummary run_repeat_trial(const std::vector<corpus::Record>& records,
                            const std::map<std::string, protocol::ReviewProtocol>& protocols,
                            const protocol::PromptSpec& prompt_spec, ScreeningBackend& backend,
                            DecisionStore& store, int trial_index = 2,
                            const RunOptions& options = {});

struct ImportRowError {
    int row = 0; // 1-based, header included
    std::string record_id;
    std::string message;
};

struct ImportResult {
    std::size_t imported = 0;
    std::vector<ImportRowError> errors;
};

/// Import human verdicts from CSV with header "record_id,verdict"
/// (verdict include/exclude, case-insensitive). Unknown record ids and
/// malformed verdicts are reported per row; the rest of the file is still
/// imported.
ImportResult import_human_decisions(const std::string& csv_text, const std::string& screener_id,
                                    const std::vector<corpus::Record>& corpus,
                                    DecisionStore& store);

} // namespace abscreen::engine
