// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_SPECIAL_HPP
#define MIMOSEC_SPECIAL_HPP

#include <cstddef>

namespace mimosec {

// Standard normal CDF Phi(x), evaluated through the Abramowitz-Stegun 7.1.26
// rational approximation of erf (|erf error| <= 1.5e-7, so |Phi error| <=
// 7.5e-8). Total on finite inputs.
double standard_normal_cdf(double x);

// CDF of Beta(1, L-1): 1 - (1-x)^(L-1) for x in [0, 1].
// Models the squared cosine of the Hermitian angle between independent
// complex Gaussian vectors of length L. Requires L >= 2 (for L = 1 the
// squared cosine is identically 1 and the law is degenerate).
double beta1_cdf(double x, std::size_t L);

// CDF of the sum of L unit-mean exponentials (Gamma(L,1), i.e. half a
// chi-square with 2L degrees of freedom): 1 - e^-x * sum_{i<L} x^i/i!.
// Requires x >= 0 and L >= 1.
double erlang_cdf(double x, std::size_t L);

} // namespace mimosec

#endif
