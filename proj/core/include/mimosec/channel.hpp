// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_CHANNEL_HPP
#define MIMOSEC_CHANNEL_HPP

#include <cstddef>
#include <vector>

#include "mimosec/linalg.hpp"
#include "mimosec/rng.hpp"

namespace mimosec {

// Large-scale path-loss/shadowing gains, linear scale. beta_users[k] scales
// user k's channel; beta_eve scales the eavesdropper's.
struct LargeScaleProfile {
    std::vector<double> beta_users;
    double beta_eve = 1.0;
};

// Uniform profile: beta_k = beta for all K users.
LargeScaleProfile uniform_profile(std::size_t K, double beta = 1.0, double beta_eve = 1.0);

// One coherence-interval draw. Fast fading G is M x K with i.i.d. unit
// variance circularly-symmetric entries; column k is user k. The physical
// channels follow as h_k = sqrt(beta_k) g_k and h_e = sqrt(beta_e) g_e.
struct ChannelRealization {
    std::size_t M = 0;
    std::size_t K = 0;
    ComplexMatrix G;      // M x K
    ComplexVector g_eve;  // length M
    LargeScaleProfile profile;
};

// Draws fast fading for all users and the eavesdropper from the stream,
// column by column (user 0 first, eavesdropper last). Deterministic given
// the stream; the eavesdropper draw is independent of all user draws.
ChannelRealization draw_realization(std::size_t M, std::size_t K,
                                    const LargeScaleProfile& profile, RngStream& rng);

// h_k = sqrt(beta_k) g_k for user k in [0, K).
ComplexVector effective_user_channel(const ChannelRealization& r, std::size_t k);

// h_e = sqrt(beta_e) g_e.
ComplexVector effective_eve_channel(const ChannelRealization& r);

} // namespace mimosec

#endif
