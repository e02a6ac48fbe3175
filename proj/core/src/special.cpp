// SPDX-License-Identifier: Apache-2.0

#include "mimosec/special.hpp"

#include <cmath>
#include <stdexcept>

namespace mimosec {

namespace {

// Abramowitz-Stegun 7.1.26 rational approximation of erf for x >= 0,
// absolute error <= 1.5e-7.
double erf_as7126(double x) {
    constexpr double p = 0.3275911;
    constexpr double a1 = 0.254829592;
    constexpr double a2 = -0.284496736;
    constexpr double a3 = 1.421413741;
    constexpr double a4 = -1.453152027;
    constexpr double a5 = 1.061405429;
    const double t = 1.0 / (1.0 + p * x);
    const double poly = ((((a5 * t + a4) * t + a3) * t + a2) * t + a1) * t;
    return 1.0 - poly * std::exp(-x * x);
}

} // namespace

double standard_normal_cdf(double x) {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    const double z = x * kInvSqrt2;
    // erf(-z) = -erf(z); evaluate the approximation on |z| only.
    const double e = erf_as7126(std::fabs(z));
    double phi = (z >= 0.0) ? 0.5 * (1.0 + e) : 0.5 * (1.0 - e);
    if (phi < 0.0)
        phi = 0.0;
    if (phi > 1.0)
        phi = 1.0;
    return phi;
}

double beta1_cdf(double x, std::size_t L) {
    if (L < 2)
        throw std::invalid_argument("beta1_cdf: L must be >= 2 (L = 1 is degenerate)");
    if (x < 0.0 || x > 1.0)
        throw std::invalid_argument("beta1_cdf: x must lie in [0, 1]");
    if (x == 0.0)
        return 0.0;
    if (x == 1.0)
        return 1.0;
    return 1.0 - std::pow(1.0 - x, static_cast<double>(L - 1));
}

double erlang_cdf(double x, std::size_t L) {
    if (L < 1)
        throw std::invalid_argument("erlang_cdf: L must be >= 1");
    if (x < 0.0)
        throw std::invalid_argument("erlang_cdf: x must be >= 0");
    if (x == 0.0)
        return 0.0;

    if (x <= 500.0) {
        // Iterated Poisson terms starting from e^-x never overflow here.
        double term = std::exp(-x);
        double sum = term;
        for (std::size_t i = 1; i < L; ++i) {
            term *= x / static_cast<double>(i);
            sum += term;
        }
        const double cdf = 1.0 - sum;
        return cdf < 0.0 ? 0.0 : (cdf > 1.0 ? 1.0 : cdf);
    }

    // Large x: e^-x may underflow, so accumulate log-terms instead.
    const double lx = std::log(x);
    double max_log = -x; // i = 0 term
    for (std::size_t i = 1; i < L; ++i) {
        const double lt = -x + static_cast<double>(i) * lx - std::lgamma(static_cast<double>(i) + 1.0);
        if (lt > max_log)
            max_log = lt;
    }
    if (max_log < -745.0)
        return 1.0; // whole tail underflows
    double scaled = 0.0;
    for (std::size_t i = 0; i < L; ++i) {
        const double lt = -x + static_cast<double>(i) * lx - std::lgamma(static_cast<double>(i) + 1.0);
        scaled += std::exp(lt - max_log);
    }
    const double cdf = 1.0 - std::exp(max_log) * scaled;
    return cdf < 0.0 ? 0.0 : (cdf > 1.0 ? 1.0 : cdf);
}

} // namespace mimosec
