#pragma once

#include "abscreen/agreement.hpp"
#include "abscreen/ensemble.hpp"
#include "abscreen/metrics.hpp"
#include "abscreen/source.hpp"
#include "abscreen/store.hpp"

#include <string>
#include <vector>

namespace abscreen::reports {

struct MetricsRow {
    std::string source;
    std::string review_id; // "all" for pooled rows
    eval::ConfusionMatrix confusion;
    eval::MetricsReport metrics;
};

/// Tabulate one row per source (pooled) or per (source, review). Rows are
/// sorted by (source, review_id).
std::vector<MetricsRow> evaluate_sources(const engine::DecisionStore& store,
                                         const std::vector<corpus::Record>& records,
                                         const std::vector<engine::ScreeningSource>& sources,
                                         bool per_review);

/// CSV with columns source, review_id, tp, tn, fp, fn, sensitivity,
/// specificity, balanced_accuracy, precision, npv, f1,
/// zero_positive_rule_applied. Metrics print at three decimals (half away
/// from zero); undefined values print empty.
std::string metrics_csv(const std::vector<MetricsRow>& rows);

/// JSON array variant; undefined metrics are explicit nulls.
std::string metrics_json(const std::vector<MetricsRow>& rows);

/// Same schema as the metrics report plus mode/component_a/component_b.
std::string ensemble_csv(const std::vector<ensemble::EnsembleResult>& results);
std::string ensemble_json(const std::vector<ensemble::EnsembleResult>& results);

std::string agreement_json(const std::string& source_a, const std::string& source_b,
                           const eval::AgreementReport& report);

/// Three-decimal metric formatting shared by every report.
std::string format_metric(const eval::Metric& m);

} // namespace abscreen::reports
