#pragma once

#include "abscreen/record.hpp"
#include "abscreen/store.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace abscreen::eval {

struct ConfusionMatrix {
    std::int64_t tp = 0;
    std::int64_t tn = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;

    std::int64_t total() const { return tp + tn + fp + fn; }
    std::int64_t positives() const { return tp + fn; }
    std::int64_t negatives() const { return tn + fp; }

    ConfusionMatrix& operator+=(const ConfusionMatrix& other) {
        tp += other.tp;
        tn += other.tn;
        fp += other.fp;
        fn += other.fn;
        return *this;
    }
};

/// A ratio metric; nullopt means the denominator was zero and the value is
/// reported as Undefined (null in JSON, empty in CSV).
using Metric = std::optional<double>;

struct MetricsReport {
    Metric sensitivity;
    Metric specificity;
    Metric balanced_accuracy;
    Metric precision;
    Metric npv;
    Metric f1;
    /// True when sensitivity was forced to 1.0 because the set had no
    /// positives (tp + fn = 0).
    bool zero_positive_rule_applied = false;
};

/// Count TP/TN/FP/FN for one source's decisions against ground truth.
/// Every record must carry a decision (MissingDecision otherwise) and a
/// binary label.
ConfusionMatrix tabulate_confusion(const std::vector<engine::ScreeningDecision>& decisions,
                                   const std::vector<corpus::Record>& records);

/// Sensitivity tp/(tp+fn) with the zero-positive convention (no positives
/// -> 1.0, flag set); specificity tn/(tn+fp); precision tp/(tp+fp);
/// npv tn/(tn+fn); f1 2tp/(2tp+fp+fn); balanced accuracy the mean of
/// sensitivity and specificity when both are defined.
MetricsReport compute_metrics(const ConfusionMatrix& cm);

} // namespace abscreen::eval
