// SPDX-License-Identifier: Apache-2.0

#include "mimosec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mimosec {

LargeScaleProfile uniform_profile(std::size_t K, double beta, double beta_eve) {
    if (K == 0)
        throw std::invalid_argument("uniform_profile: K must be >= 1");
    if (!(beta > 0.0) || !(beta_eve > 0.0))
        throw std::invalid_argument("uniform_profile: gains must be strictly positive");
    LargeScaleProfile p;
    p.beta_users.assign(K, beta);
    p.beta_eve = beta_eve;
    return p;
}

static void check_profile(const LargeScaleProfile& profile, std::size_t K) {
    if (profile.beta_users.size() != K)
        throw std::invalid_argument("profile: beta_users length must equal K");
    for (double b : profile.beta_users)
        if (!(b > 0.0) || !std::isfinite(b))
            throw std::invalid_argument("profile: user gains must be positive and finite");
    if (!(profile.beta_eve > 0.0) || !std::isfinite(profile.beta_eve))
        throw std::invalid_argument("profile: eavesdropper gain must be positive and finite");
}

ChannelRealization draw_realization(std::size_t M, std::size_t K,
                                    const LargeScaleProfile& profile, RngStream& rng) {
    if (M == 0 || K == 0)
        throw std::invalid_argument("draw_realization: M and K must be >= 1");
    check_profile(profile, K);

    ChannelRealization r;
    r.M = M;
    r.K = K;
    r.G = ComplexMatrix(M, K);
    r.profile = profile;
    for (std::size_t k = 0; k < K; ++k) {
        const ComplexVector g = sample_complex_standard_normal(rng, M);
        for (std::size_t i = 0; i < M; ++i)
            r.G(i, k) = g[i];
    }
    r.g_eve = sample_complex_standard_normal(rng, M);
    return r;
}

ComplexVector effective_user_channel(const ChannelRealization& r, std::size_t k) {
    if (k >= r.K)
        throw std::invalid_argument("effective_user_channel: user index out of range");
    const double scale = std::sqrt(r.profile.beta_users[k]);
    ComplexVector h(r.M);
    for (std::size_t i = 0; i < r.M; ++i)
        h[i] = scale * r.G(i, k);
    return h;
}

ComplexVector effective_eve_channel(const ChannelRealization& r) {
    const double scale = std::sqrt(r.profile.beta_eve);
    ComplexVector h(r.M);
    for (std::size_t i = 0; i < r.M; ++i)
        h[i] = scale * r.g_eve[i];
    return h;
}

} // namespace mimosec
