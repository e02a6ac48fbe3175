// SPDX-License-Identifier: Apache-2.0

#include "mimosec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mimosec {

double sample_mean(const EmpiricalSample& x) {
    if (x.empty())
        throw std::invalid_argument("sample_mean: empty sample");
    double acc = 0.0;
    for (double v : x)
        acc += v;
    return acc / static_cast<double>(x.size());
}

double sample_variance(const EmpiricalSample& x) {
    if (x.size() < 2)
        throw std::invalid_argument("sample_variance: need at least two samples");
    const double m = sample_mean(x);
    double acc = 0.0;
    for (double v : x)
        acc += (v - m) * (v - m);
    return acc / static_cast<double>(x.size() - 1);
}

double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf) {
    if (sample.empty())
        throw std::invalid_argument("ks_statistic: empty sample");
    EmpiricalSample sorted = sample;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double upper = (static_cast<double>(i) + 1.0) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        d = std::max(d, std::max(upper, lower));
    }
    return d;
}

double ks_critical_1pct(std::size_t n) {
    if (n == 0)
        throw std::invalid_argument("ks_critical_1pct: n must be >= 1");
    return 1.63 / std::sqrt(static_cast<double>(n));
}

double pearson_correlation(const EmpiricalSample& x, const EmpiricalSample& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("pearson_correlation: length mismatch");
    if (x.size() < 2)
        throw std::invalid_argument("pearson_correlation: need at least two pairs");
    const double mx = sample_mean(x);
    const double my = sample_mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::domain_error("pearson_correlation: zero-variance input, correlation undefined");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace mimosec
