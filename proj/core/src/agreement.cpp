#include "abscreen/agreement.hpp"

#include "abscreen/errors.hpp"

#include <map>

namespace abscreen::eval {

AgreementReport cohen_kappa(const std::vector<bool>& a, const std::vector<bool>& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::RecordSetMismatch,
                    "decision vectors differ in length: " + std::to_string(a.size()) + " vs " +
                        std::to_string(b.size()));
    if (a.empty())
        throw Error(ErrorCode::RecordSetMismatch, "cannot compute kappa over zero records");

    const double n = static_cast<double>(a.size());
    std::size_t agree = 0, a_inc = 0, b_inc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        agree += a[i] == b[i];
        a_inc += a[i];
        b_inc += b[i];
    }
    const double po = static_cast<double>(agree) / n;
    const double pa = static_cast<double>(a_inc) / n;
    const double pb = static_cast<double>(b_inc) / n;
    const double pe = pa * pb + (1.0 - pa) * (1.0 - pb);

    AgreementReport report;
    report.observed_agreement = po;
    report.n = a.size();
    if (pe >= 1.0) {
        // Both raters constant and equal: kappa defined only if they agree
        // everywhere.
        if (po >= 1.0)
            report.kappa = 1.0;
        return report;
    }
    report.kappa = (po - pe) / (1.0 - pe);
    return report;
}

AgreementReport cohen_kappa(const std::vector<engine::ScreeningDecision>& a,
                            const std::vector<engine::ScreeningDecision>& b) {
    std::map<std::string, bool> map_a;
    for (const auto& d : a)
        map_a.emplace(d.record_id, d.verdict == protocol::Verdict::Include);
    if (map_a.size() != a.size() || a.size() != b.size())
        throw Error(ErrorCode::RecordSetMismatch,
                    "sources decided different record sets (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");

    std::vector<bool> va, vb;
    va.reserve(b.size());
    vb.reserve(b.size());
    for (const auto& d : b) {
        auto it = map_a.find(d.record_id);
        if (it == map_a.end())
            throw Error(ErrorCode::RecordSetMismatch,
                        "record " + d.record_id + " decided by one source only");
        va.push_back(it->second);
        vb.push_back(d.verdict == protocol::Verdict::Include);
    }
    return cohen_kappa(va, vb);
}

} // namespace abscreen::eval
