// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_ASYMPTOTICS_HPP
#define MIMOSEC_ASYMPTOTICS_HPP

#include <cstddef>
#include <utility>

#include "mimosec/linalg.hpp"
#include "mimosec/stats.hpp"

namespace mimosec {

// psi = 1/log2(e) = ln 2, the factor turning binary logs into natural logs.
constexpr double kPsi = 0.69314718055994530942;

// Gaussian limit of the trimmed sum (sum of the L largest of M i.i.d.
// unit-mean exponentials): mean L(1 + ln(M/L)), variance L(2 - L/M).
struct TrimmedSumLaw {
    double mean = 0.0;
    double variance = 0.0;
    double psi = kPsi;
};

TrimmedSumLaw trimmed_sum_law(std::size_t M, std::size_t L);

// Large-M rate predictor under full transmit complexity: log2(1 + rho_m beta_k M).
double predict_rate_full(std::size_t M, double rho_m, double beta_k);

// Large-M rate predictor under strongest-L selection:
// log2(1 + psi rho_m beta_1 L log2(M)).
double predict_rate_selection(std::size_t M, std::size_t L, double rho_m, double beta_1);

// Limiting mean and variance of the eavesdropper SNR under strongest-L
// selection: (rho_e beta_e, rho_e^2 beta_e^2), independent of M and L.
std::pair<double, double> eve_snr_moments(double rho_e, double beta_e);

// Squared cosine of the Hermitian angle: |a^T conj(b)|^2 / (||a||^2 ||b||^2),
// clamped to [0, 1] against rounding. Both vectors must be nonzero.
double hermitian_angle_cos2(const ComplexVector& a, const ComplexVector& b);

// Closed-form reference laws for the distribution checks.
struct DistributionLaw {
    enum class Kind { TrimmedSum, BetaCos2, ErlangNorm } kind;
    std::size_t M = 0; // TrimmedSum only
    std::size_t L = 0;

    static DistributionLaw trimmed_sum(std::size_t M, std::size_t L) {
        return {Kind::TrimmedSum, M, L};
    }
    static DistributionLaw beta_cos2(std::size_t L) { return {Kind::BetaCos2, 0, L}; }
    static DistributionLaw erlang_norm(std::size_t L) { return {Kind::ErlangNorm, 0, L}; }
};

struct ValidationRecord {
    double ks = 0.0;        // KS statistic against the law's CDF
    double threshold = 0.0; // 1.63/sqrt(n), asymptotic 1% level
    bool pass = false;      // ks < threshold
};

// KS check of the sample against the named law at the 1% level. Requires
// sample size >= 100 so the asymptotic critical value applies; BetaCos2
// refuses L = 1 (degenerate law).
ValidationRecord validate_distribution(const EmpiricalSample& sample, const DistributionLaw& law);

// Pearson sample correlation of paired samples (>= 100 pairs).
double independence_check(const EmpiricalSample& x, const EmpiricalSample& y);

} // namespace mimosec

#endif
