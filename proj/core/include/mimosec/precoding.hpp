// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_PRECODING_HPP
#define MIMOSEC_PRECODING_HPP

#include "mimosec/linalg.hpp"
#include "mimosec/selection.hpp"

namespace mimosec {

enum class PrecoderScheme { MRT, ZF };

struct PrecodingMatrix {
    ComplexMatrix W; // L x K, unit-norm columns
    PrecoderScheme scheme = PrecoderScheme::MRT;
};

// Maximum ratio transmission: column k is conj(h_k) / ||h_k|| on the
// reduced channel. Throws std::domain_error on a zero column (probability
// zero under the fading model; indicates corrupted input).
PrecodingMatrix mrt_precoder(const SelectionResult& selection);

// Zero forcing on the reduced channel: W0 = conj(H) (H^T conj(H))^-1, each
// column then normalized to unit norm, so H^T W is diagonal. Requires
// K <= L and a full-column-rank reduced channel; otherwise throws
// std::domain_error (infeasible precoder).
PrecodingMatrix zf_precoder(const SelectionResult& selection);

PrecodingMatrix make_precoder(const SelectionResult& selection, PrecoderScheme scheme);

} // namespace mimosec

#endif
