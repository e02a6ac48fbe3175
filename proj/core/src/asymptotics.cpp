// SPDX-License-Identifier: Apache-2.0

#include "mimosec/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "mimosec/special.hpp"

namespace mimosec {

TrimmedSumLaw trimmed_sum_law(std::size_t M, std::size_t L) {
    if (L == 0 || L > M)
        throw std::invalid_argument("trimmed_sum_law: require 1 <= L <= M");
    TrimmedSumLaw law;
    const double dM = static_cast<double>(M);
    const double dL = static_cast<double>(L);
    // psi * log2(M/L) = ln(M/L)
    law.mean = dL * (1.0 + std::log(dM / dL));
    law.variance = dL * (2.0 - dL / dM);
    return law;
}

double predict_rate_full(std::size_t M, double rho_m, double beta_k) {
    if (M == 0 || !(rho_m > 0.0) || !(beta_k > 0.0))
        throw std::invalid_argument("predict_rate_full: all arguments must be positive");
    return std::log2(1.0 + rho_m * beta_k * static_cast<double>(M));
}

double predict_rate_selection(std::size_t M, std::size_t L, double rho_m, double beta_1) {
    if (L == 0 || L > M)
        throw std::invalid_argument("predict_rate_selection: require 1 <= L <= M");
    if (!(rho_m > 0.0) || !(beta_1 > 0.0))
        throw std::invalid_argument("predict_rate_selection: parameters must be positive");
    const double log2M = std::log2(static_cast<double>(M));
    return std::log2(1.0 + kPsi * rho_m * beta_1 * static_cast<double>(L) * log2M);
}

std::pair<double, double> eve_snr_moments(double rho_e, double beta_e) {
    if (!(rho_e > 0.0) || !(beta_e > 0.0))
        throw std::invalid_argument("eve_snr_moments: parameters must be positive");
    const double mean = rho_e * beta_e;
    return {mean, mean * mean};
}

double hermitian_angle_cos2(const ComplexVector& a, const ComplexVector& b) {
    const double na = squared_norm(a);
    const double nb = squared_norm(b);
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("hermitian_angle_cos2: zero vector");
    // |a^T conj(b)|^2 = |inner_product_t(a, b)|^2
    const double num = std::norm(inner_product_t(a, b));
    double c = num / (na * nb);
    if (c < 0.0)
        c = 0.0;
    if (c > 1.0)
        c = 1.0;
    return c;
}

ValidationRecord validate_distribution(const EmpiricalSample& sample, const DistributionLaw& law) {
    if (sample.size() < 100)
        throw std::invalid_argument("validate_distribution: need at least 100 samples");

    std::function<double(double)> cdf;
    switch (law.kind) {
        case DistributionLaw::Kind::TrimmedSum: {
            const TrimmedSumLaw ts = trimmed_sum_law(law.M, law.L);
            const double sd = std::sqrt(ts.variance);
            cdf = [mean = ts.mean, sd](double x) { return standard_normal_cdf((x - mean) / sd); };
            break;
        }
        case DistributionLaw::Kind::BetaCos2: {
            const std::size_t L = law.L;
            if (L < 2)
                throw std::invalid_argument("validate_distribution: beta law degenerate at L = 1");
            cdf = [L](double x) {
                if (x <= 0.0)
                    return 0.0;
                if (x >= 1.0)
                    return 1.0;
                return beta1_cdf(x, L);
            };
            break;
        }
        case DistributionLaw::Kind::ErlangNorm: {
            const std::size_t L = law.L;
            if (L < 1)
                throw std::invalid_argument("validate_distribution: erlang law needs L >= 1");
            cdf = [L](double x) { return x <= 0.0 ? 0.0 : erlang_cdf(x, L); };
            break;
        }
        default:
            throw std::invalid_argument("validate_distribution: unknown law");
    }

    ValidationRecord rec;
    rec.ks = ks_statistic(sample, cdf);
    rec.threshold = ks_critical_1pct(sample.size());
    rec.pass = rec.ks < rec.threshold;
    return rec;
}

double independence_check(const EmpiricalSample& x, const EmpiricalSample& y) {
    if (x.size() != y.size() || x.size() < 100)
        throw std::invalid_argument("independence_check: need paired samples of equal length >= 100");
    return pearson_correlation(x, y);
}

} // namespace mimosec
