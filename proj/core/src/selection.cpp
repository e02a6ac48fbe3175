// SPDX-License-Identifier: Apache-2.0

#include "mimosec/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mimosec {

namespace {

// Builds the reduced channels for a fixed index list.
SelectionResult make_result(const ChannelRealization& r, std::vector<std::size_t> indices) {
    SelectionResult s;
    s.H_eff = ComplexMatrix(indices.size(), r.K);
    s.h_eve_eff.resize(indices.size());
    const double eve_scale = std::sqrt(r.profile.beta_eve);
    for (std::size_t j = 0; j < indices.size(); ++j) {
        const std::size_t i = indices[j];
        for (std::size_t k = 0; k < r.K; ++k)
            s.H_eff(j, k) = std::sqrt(r.profile.beta_users[k]) * r.G(i, k);
        s.h_eve_eff[j] = eve_scale * r.g_eve[i];
    }
    s.active_indices = std::move(indices);
    return s;
}

} // namespace

SelectionResult select_strongest(const ChannelRealization& r, std::size_t L,
                                 std::optional<std::size_t> reference_user) {
    if (L == 0 || L > r.M)
        throw std::invalid_argument("select_strongest: require 1 <= L <= M");
    if (reference_user && *reference_user >= r.K)
        throw std::invalid_argument("select_strongest: reference user out of range");

    std::vector<double> metric(r.M, 0.0);
    if (reference_user) {
        const double beta = r.profile.beta_users[*reference_user];
        for (std::size_t i = 0; i < r.M; ++i)
            metric[i] = beta * std::norm(r.G(i, *reference_user));
    } else {
        for (std::size_t i = 0; i < r.M; ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k < r.K; ++k)
                acc += r.profile.beta_users[k] * std::norm(r.G(i, k));
            metric[i] = acc;
        }
    }

    std::vector<std::size_t> order(r.M);
    std::iota(order.begin(), order.end(), 0);
    const auto stronger = [&metric](std::size_t a, std::size_t b) {
        if (metric[a] != metric[b])
            return metric[a] > metric[b];
        return a < b; // ties: lower antenna index first
    };
    if (L < r.M) {
        std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(L),
                          order.end(), stronger);
    } else {
        std::sort(order.begin(), order.end(), stronger);
    }
    order.resize(L);
    return make_result(r, std::move(order));
}

SelectionResult select_random(const ChannelRealization& r, std::size_t L, RngStream& rng) {
    if (L == 0 || L > r.M)
        throw std::invalid_argument("select_random: require 1 <= L <= M");
    // Partial Fisher-Yates: the first L slots end up a uniform L-subset.
    std::vector<std::size_t> pool(r.M);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t j = 0; j < L; ++j) {
        const std::size_t pick = j + static_cast<std::size_t>(rng.uniform_below(r.M - j));
        std::swap(pool[j], pool[pick]);
    }
    pool.resize(L);
    return make_result(r, std::move(pool));
}

SelectionResult select_full(const ChannelRealization& r) {
    std::vector<std::size_t> all(r.M);
    std::iota(all.begin(), all.end(), 0);
    return make_result(r, std::move(all));
}

SelectionResult apply_selection(const ChannelRealization& r, const SelectionSpec& spec,
                                RngStream& rng) {
    switch (spec.strategy) {
        case SelectionStrategy::Strongest:
            return select_strongest(r, spec.L, spec.reference_user);
        case SelectionStrategy::Random:
            return select_random(r, spec.L, rng);
        case SelectionStrategy::Full:
            return select_full(r);
    }
    throw std::invalid_argument("apply_selection: unknown strategy");
}

} // namespace mimosec
