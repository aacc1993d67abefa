#include "abscreen/correlation.hpp"

#include "abscreen/errors.hpp"

#include <cmath>

namespace abscreen::eval {

double pearson_r(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw Error(ErrorCode::RecordSetMismatch, "x and y lengths differ");
    const std::size_t n = xs.size();
    if (n < 2)
        throw Error(ErrorCode::DegenerateVariance, "need at least two points");

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error(ErrorCode::DegenerateVariance, "zero variance in one variable");
    return sxy / std::sqrt(sxx * syy);
}

double r_squared(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double r = pearson_r(xs, ys);
    return r * r;
}

} // namespace abscreen::eval
