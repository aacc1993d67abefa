#include "abscreen/reports.hpp"

#include "abscreen/errors.hpp"
#include "abscreen/util.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>

namespace abscreen::reports {

using nlohmann::json;

std::string format_metric(const eval::Metric& m) {
    if (!m)
        return "";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", util::round3(*m));
    return buf;
}

namespace {

json metric_json_value(const eval::Metric& m) {
    if (!m)
        return nullptr;
    return util::round3(*m);
}

json row_json(const std::string& review_id, const eval::ConfusionMatrix& cm,
              const eval::MetricsReport& r) {
    json j;
    j["review_id"] = review_id;
    j["tp"] = cm.tp;
    j["tn"] = cm.tn;
    j["fp"] = cm.fp;
    j["fn"] = cm.fn;
    j["sensitivity"] = metric_json_value(r.sensitivity);
    j["specificity"] = metric_json_value(r.specificity);
    j["balanced_accuracy"] = metric_json_value(r.balanced_accuracy);
    j["precision"] = metric_json_value(r.precision);
    j["npv"] = metric_json_value(r.npv);
    j["f1"] = metric_json_value(r.f1);
    j["zero_positive_rule_applied"] = r.zero_positive_rule_applied;
    return j;
}

void append_metric_cells(std::string& out, const eval::ConfusionMatrix& cm,
                         const eval::MetricsReport& r) {
    out += std::to_string(cm.tp) + "," + std::to_string(cm.tn) + "," + std::to_string(cm.fp) +
           "," + std::to_string(cm.fn);
    for (const auto* m :
         {&r.sensitivity, &r.specificity, &r.balanced_accuracy, &r.precision, &r.npv, &r.f1}) {
        out += ",";
        out += format_metric(*m);
    }
    out += ",";
    out += r.zero_positive_rule_applied ? "true" : "false";
}

} // namespace

std::vector<MetricsRow> evaluate_sources(const engine::DecisionStore& store,
                                         const std::vector<corpus::Record>& records,
                                         const std::vector<engine::ScreeningSource>& sources,
                                         bool per_review) {
    std::vector<MetricsRow> rows;
    for (const auto& source : sources) {
        const auto decisions = store.decisions_for(source);
        if (per_review) {
            std::map<std::string, std::vector<corpus::Record>> by_review;
            for (const auto& r : records)
                by_review[r.review_id].push_back(r);
            for (const auto& [review_id, review_records] : by_review) {
                MetricsRow row;
                row.source = source.key();
                row.review_id = review_id;
                row.confusion = eval::tabulate_confusion(decisions, review_records);
                row.metrics = eval::compute_metrics(row.confusion);
                rows.push_back(std::move(row));
            }
        } else {
            MetricsRow row;
            row.source = source.key();
            row.review_id = "all";
            row.confusion = eval::tabulate_confusion(decisions, records);
            row.metrics = eval::compute_metrics(row.confusion);
            rows.push_back(std::move(row));
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.source != b.source)
            return a.source < b.source;
        return a.review_id < b.review_id;
    });
    return rows;
}

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
    std::string out = "source,review_id,tp,tn,fp,fn,sensitivity,specificity,balanced_accuracy,"
                      "precision,npv,f1,zero_positive_rule_applied\n";
    for (const auto& row : rows) {
        out += util::csv_escape(row.source) + "," + util::csv_escape(row.review_id) + ",";
        append_metric_cells(out, row.confusion, row.metrics);
        out += "\n";
    }
    return out;
}

std::string metrics_json(const std::vector<MetricsRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        json j = row_json(row.review_id, row.confusion, row.metrics);
        j["source"] = row.source;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string ensemble_csv(const std::vector<ensemble::EnsembleResult>& results) {
    std::string out = "mode,component_a,component_b,tp,tn,fp,fn,sensitivity,specificity,"
                      "balanced_accuracy,precision,npv,f1,zero_positive_rule_applied\n";
    for (const auto& res : results) {
        out += std::string(ensemble::to_string(res.config.mode)) + "," +
               util::csv_escape(res.config.component_a.key()) + "," +
               util::csv_escape(res.config.component_b.key()) + ",";
        append_metric_cells(out, res.confusion, res.metrics);
        out += "\n";
    }
    return out;
}

std::string ensemble_json(const std::vector<ensemble::EnsembleResult>& results) {
    json arr = json::array();
    for (const auto& res : results) {
        json j = row_json("all", res.confusion, res.metrics);
        j.erase("review_id");
        j["mode"] = ensemble::to_string(res.config.mode);
        j["component_a"] = res.config.component_a.key();
        j["component_b"] = res.config.component_b.key();
        j["configuration_class"] = res.config.configuration_class();
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string agreement_json(const std::string& source_a, const std::string& source_b,
                           const eval::AgreementReport& report) {
    json j;
    j["source_a"] = source_a;
    j["source_b"] = source_b;
    j["kappa"] = report.kappa ? json(util::round3(*report.kappa)) : json(nullptr);
    j["degenerate"] = report.degenerate();
    j["observed_agreement"] = util::round3(report.observed_agreement);
    j["n"] = report.n;
    return j.dump(2) + "\n";
}

} // namespace abscreen::reports
