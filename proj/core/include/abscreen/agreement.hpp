#pragma once

#include "abscreen/store.hpp"

#include <optional>
#include <vector>

namespace abscreen::eval {

struct AgreementReport {
    /// Cohen's kappa; nullopt when expected agreement is 1 with imperfect
    /// observed agreement (degenerate: both raters constant and equal).
    std::optional<double> kappa;
    double observed_agreement = 0.0;
    std::size_t n = 0;

    bool degenerate() const { return !kappa.has_value(); }
};

/// Chance-corrected agreement between two decision columns over the same
/// record set. Throws RecordSetMismatch when the sets differ.
AgreementReport cohen_kappa(const std::vector<engine::ScreeningDecision>& a,
                            const std::vector<engine::ScreeningDecision>& b);

/// Verdict-vector variant used by tests and property checks; true = include.
AgreementReport cohen_kappa(const std::vector<bool>& a, const std::vector<bool>& b);

} // namespace abscreen::eval
