// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_STATS_HPP
#define MIMOSEC_STATS_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace mimosec {

// Carrier for empirical statistic samples used by the distribution checks.
using EmpiricalSample = std::vector<double>;

double sample_mean(const EmpiricalSample& x);

// Unbiased (n-1) sample variance. Requires size >= 2.
double sample_variance(const EmpiricalSample& x);

// Two-sided Kolmogorov-Smirnov statistic of the sample against a reference
// CDF F: D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n) over the sorted
// sample. Throws std::invalid_argument for an empty sample.
double ks_statistic(const EmpiricalSample& sample, const std::function<double(double)>& cdf);

// Asymptotic 1% critical value 1.63/sqrt(n) for the one-sample KS test.
double ks_critical_1pct(std::size_t n);

// Pearson sample correlation of paired samples. Requires equal lengths
// >= 2 and nonzero variance in both coordinates.
double pearson_correlation(const EmpiricalSample& x, const EmpiricalSample& y);

} // namespace mimosec

#endif
