#include "abscreen/metrics.hpp"

#include "abscreen/errors.hpp"

#include <map>

namespace abscreen::eval {

ConfusionMatrix tabulate_confusion(const std::vector<engine::ScreeningDecision>& decisions,
                                   const std::vector<corpus::Record>& records) {
    std::map<std::string, const engine::ScreeningDecision*> by_record;
    for (const auto& d : decisions)
        by_record.emplace(d.record_id, &d);

    ConfusionMatrix cm;
    for (const auto& r : records) {
        auto it = by_record.find(r.record_id);
        if (it == by_record.end())
            throw Error(ErrorCode::MissingDecision,
                        "record " + r.record_id + " has no decision for this source");
        if (r.ground_truth == corpus::GroundTruth::Unlabelled)
            throw Error(ErrorCode::MissingDecision,
                        "record " + r.record_id + " has no ground-truth label");
        const bool included = it->second->verdict == protocol::Verdict::Include;
        const bool eligible = r.ground_truth == corpus::GroundTruth::IncludedInReview;
        if (included && eligible)
            ++cm.tp;
        else if (included && !eligible)
            ++cm.fp;
        else if (!included && eligible)
            ++cm.fn;
        else
            ++cm.tn;
    }
    return cm;
}

MetricsReport compute_metrics(const ConfusionMatrix& cm) {
    MetricsReport report;
    const auto ratio = [](std::int64_t num, std::int64_t den) -> Metric {
        if (den == 0)
            return std::nullopt;
        return static_cast<double>(num) / static_cast<double>(den);
    };

    if (cm.positives() == 0) {
        report.sensitivity = 1.0;
        report.zero_positive_rule_applied = true;
    } else {
        report.sensitivity = ratio(cm.tp, cm.positives());
    }
    report.specificity = ratio(cm.tn, cm.negatives());
    report.precision = ratio(cm.tp, cm.tp + cm.fp);
    report.npv = ratio(cm.tn, cm.tn + cm.fn);
    report.f1 = ratio(2 * cm.tp, 2 * cm.tp + cm.fp + cm.fn);
    if (report.sensitivity && report.specificity)
        report.balanced_accuracy = (*report.sensitivity + *report.specificity) / 2.0;
    return report;
}

} // namespace abscreen::eval
