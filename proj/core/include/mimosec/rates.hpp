// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_RATES_HPP
#define MIMOSEC_RATES_HPP

#include <cstddef>
#include <vector>

#include "mimosec/precoding.hpp"
#include "mimosec/selection.hpp"

namespace mimosec {

// Transmit-power-to-noise ratios at the legitimate terminals and at the
// eavesdropper, linear scale. dB conversion is a CLI/config concern.
struct LinkBudget {
    double rho_m = 1.0;
    double rho_e = 1.0;
};

// Per-user link metrics for one realization. All rates in bits per channel
// use (binary logarithm throughout).
struct UserRate {
    double sinr_m = 0.0;       // SINR at the legitimate terminal
    double snr_e = 0.0;        // SNR at the eavesdropper overhearing this user
    double rate_main = 0.0;    // log2(1 + sinr_m)
    double rate_eve = 0.0;     // log2(1 + snr_e)
    double rate_secrecy = 0.0; // max(0, rate_main - rate_eve)
    double cost = 0.0;         // 1 - rate_secrecy/rate_main, 0 when rate_main = 0
};

struct RateReport {
    std::vector<UserRate> user; // size K
};

// SINR of user k: rho_m |h_k^T w_k|^2 / (1 + rho_m sum_{j!=k} |h_k^T w_j|^2)
// on the reduced channel.
double sinr_legitimate(const SelectionResult& selection, const PrecodingMatrix& precoder,
                       std::size_t k, const LinkBudget& budget);

// Worst-case eavesdropper SNR while overhearing user k's stream:
// rho_e |h_e^T w_k|^2. The eavesdropper is assumed to cancel all other
// users' interference, so no interference term appears.
double snr_eavesdropper(const SelectionResult& selection, const PrecodingMatrix& precoder,
                        std::size_t k, const LinkBudget& budget);

// Achievable rate log2(1 + sinr) in bits per channel use.
double rate_main(double sinr);

// Secrecy rate [rate_main - rate_eve]^+; identical to the nonnegative part
// of log2((1 + SINR)/(1 + SNR_e)).
double rate_secrecy(double rate_main_bits, double rate_eve_bits);

// Relative secrecy cost 1 - rate_secrecy/rate_main in [0, 1]. A zero main
// rate pays no secrecy cost: returns 0.
double relative_secrecy_cost(double rate_main_bits, double rate_secrecy_bits);

// Full per-realization pipeline: selection, precoding, per-user rates and
// costs. rng is consumed only by random selection.
RateReport evaluate_realization(const ChannelRealization& realization,
                                const SelectionSpec& selection, PrecoderScheme scheme,
                                const LinkBudget& budget, RngStream& rng);

} // namespace mimosec

#endif
