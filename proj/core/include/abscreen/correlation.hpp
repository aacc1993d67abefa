#pragma once

#include <vector>

namespace abscreen::eval {

/// Product-moment correlation coefficient. Requires at least two points and
/// nonzero variance in both variables (DegenerateVariance otherwise).
double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys);

/// Coefficient of determination of the single-predictor least-squares fit:
/// the square of pearson_r.
double r_squared(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace abscreen::eval
