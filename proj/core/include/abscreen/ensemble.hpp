#pragma once

#include "abscreen/metrics.hpp"
#include "abscreen/source.hpp"
#include "abscreen/store.hpp"
#include "abscreen/verdict.hpp"

#include <string>
#include <vector>

namespace abscreen::ensemble {

enum class EnsembleMode {
    Series,   // AND: include only when both components include
    Parallel, // OR: include when either component includes
};

const char* to_string(EnsembleMode mode);
EnsembleMode ensemble_mode_from_string(const std::string& s);

struct EnsembleConfig {
    EnsembleMode mode = EnsembleMode::Parallel;
    engine::ScreeningSource component_a;
    engine::ScreeningSource component_b;

    /// Throws ConfigError when both components are the same source.
    void validate() const;

    /// "llm+llm", "llm+human" or "human+human".
    std::string configuration_class() const;

    /// Stable report ordering: (mode, component keys).
    std::string sort_key() const;
};

/// Record-level combination of two binary verdicts.
protocol::Verdict combine_pair(protocol::Verdict a, protocol::Verdict b, EnsembleMode mode);

struct EnsembleResult {
    EnsembleConfig config;
    eval::ConfusionMatrix confusion;
    eval::MetricsReport metrics;
};

/// Combine each config's two decision columns record by record, then
/// tabulate against ground truth. Results are sorted by
/// EnsembleConfig::sort_key. Throws MissingDecision when a component has
/// not decided every record.
std::vector<EnsembleResult> evaluate_ensembles(const engine::DecisionStore& store,
                                               const std::vector<corpus::Record>& records,
                                               const std::vector<EnsembleConfig>& configs);

/// Every unordered pair of `sources` under `mode`.
std::vector<EnsembleConfig> all_pairs(const std::vector<engine::ScreeningSource>& sources,
                                      EnsembleMode mode);

} // namespace abscreen::ensemble
