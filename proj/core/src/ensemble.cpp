#include "abscreen/ensemble.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <algorithm>
#include <map>

namespace abscreen::ensemble {

const char* to_string(EnsembleMode mode) {
    return mode == EnsembleMode::Series ? "series" : "parallel";
}

EnsembleMode ensemble_mode_from_string(const std::string& s) {
    const std::string m = util::to_lower(util::trim(s));
    if (m == "series" || m == "and")
        return EnsembleMode::Series;
    if (m == "parallel" || m == "or")
        return EnsembleMode::Parallel;
    throw Error(ErrorCode::ConfigError, "unknown ensemble mode '" + s + "'");
}

void EnsembleConfig::validate() const {
    if (component_a == component_b)
        throw Error(ErrorCode::ConfigError,
                    "ensemble components must differ: " + component_a.key());
}

std::string EnsembleConfig::configuration_class() const {
    const int models = (component_a.is_model() ? 1 : 0) + (component_b.is_model() ? 1 : 0);
    switch (models) {
    case 2: return "llm+llm";
    case 1: return "llm+human";
    default: return "human+human";
    }
}

std::string EnsembleConfig::sort_key() const {
    std::string a = component_a.key();
    std::string b = component_b.key();
    if (b < a)
        std::swap(a, b);
    return std::string(to_string(mode)) + "|" + a + "|" + b;
}

protocol::Verdict combine_pair(protocol::Verdict a, protocol::Verdict b, EnsembleMode mode) {
    using protocol::Verdict;
    if (a == Verdict::Uninterpretable || b == Verdict::Uninterpretable)
        throw Error(ErrorCode::InvalidFormat, "ensemble inputs must be binary verdicts");
    const bool inc_a = a == Verdict::Include;
    const bool inc_b = b == Verdict::Include;
    const bool inc =
        mode == EnsembleMode::Series ? (inc_a && inc_b) : (inc_a || inc_b);
    return inc ? Verdict::Include : Verdict::Exclude;
}

std::vector<EnsembleResult> evaluate_ensembles(const engine::DecisionStore& store,
                                               const std::vector<corpus::Record>& records,
                                               const std::vector<EnsembleConfig>& configs) {
    std::vector<EnsembleResult> results;
    results.reserve(configs.size());

    for (const auto& config : configs) {
        config.validate();

        std::map<std::string, protocol::Verdict> va, vb;
        for (const auto& d : store.decisions_for(config.component_a))
            va.emplace(d.record_id, d.verdict);
        for (const auto& d : store.decisions_for(config.component_b))
            vb.emplace(d.record_id, d.verdict);

        std::vector<engine::ScreeningDecision> combined;
        combined.reserve(records.size());
        for (const auto& r : records) {
            auto ita = va.find(r.record_id);
            auto itb = vb.find(r.record_id);
            if (ita == va.end())
                throw Error(ErrorCode::MissingDecision,
                            config.component_a.key() + " has no decision for " + r.record_id);
            if (itb == vb.end())
                throw Error(ErrorCode::MissingDecision,
                            config.component_b.key() + " has no decision for " + r.record_id);
            engine::ScreeningDecision d;
            d.record_id = r.record_id;
            d.verdict = combine_pair(ita->second, itb->second, config.mode);
            combined.push_back(std::move(d));
        }

        EnsembleResult result;
        result.config = config;
        result.confusion = eval::tabulate_confusion(combined, records);
        result.metrics = eval::compute_metrics(result.confusion);
        results.push_back(std::move(result));
    }

    std::stable_sort(results.begin(), results.end(), [](const auto& x, const auto& y) {
        return x.config.sort_key() < y.config.sort_key();
    });
    return results;
}

std::vector<EnsembleConfig> all_pairs(const std::vector<engine::ScreeningSource>& sources,
                                      EnsembleMode mode) {
    std::vector<EnsembleConfig> configs;
    for (std::size_t i = 0; i < sources.size(); ++i)
        for (std::size_t j = i + 1; j < sources.size(); ++j)
            configs.push_back(EnsembleConfig{mode, sources[i], sources[j]});
    return configs;
}

} // namespace abscreen::ensemble
