// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mimosec/precoding.hpp"
#include "mimosec/rates.hpp"
#include "mimosec/selection.hpp"
#include "mimosec/special.hpp"
#include "mimosec/stats.hpp"
#include "oracles.hpp"

using namespace mimosec;

namespace {

ChannelRealization make_single_user(const ComplexVector& g, double beta = 1.0,
                                    ComplexVector g_eve = {}) {
    ChannelRealization r;
    r.M = g.size();
    r.K = 1;
    r.G = ComplexMatrix(g.size(), 1);
    for (std::size_t i = 0; i < g.size(); ++i)
        r.G(i, 0) = g[i];
    if (g_eve.empty())
        g_eve.assign(g.size(), cxd(0.1, 0.0));
    r.g_eve = std::move(g_eve);
    r.profile.beta_users = {beta};
    r.profile.beta_eve = 1.0;
    return r;
}

} // namespace

TEST_CASE("select_strongest: magnitude ordering and tie-break") {
    const ChannelRealization r = make_single_user({cxd(0.5, 0), cxd(2, 0), cxd(-1, 0)});
    const SelectionResult s = select_strongest(r, 2, 0);
    CHECK(s.active_indices == std::vector<std::size_t>{1, 2});

    const ChannelRealization ties = make_single_user({cxd(1, 0), cxd(1, 0), cxd(1, 0)});
    CHECK(select_strongest(ties, 2, 0).active_indices == std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(select_strongest(r, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_strongest(r, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(select_strongest(r, 1, 3), std::invalid_argument);
}

TEST_CASE("select_strongest matches a full-sort oracle") {
    RngStream rng(7, 0);
    const ChannelRealization r = draw_realization(64, 1, uniform_profile(1), rng);
    const SelectionResult s = select_strongest(r, 8, 0);

    std::vector<std::pair<double, std::size_t>> mags(64);
    for (std::size_t i = 0; i < 64; ++i)
        mags[i] = {std::norm(r.G(i, 0)), i};
    std::stable_sort(mags.begin(), mags.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t j = 0; j < 8; ++j)
        CHECK(s.active_indices[j] == mags[j].second);
}

TEST_CASE("select_strongest: row-norm default vs reference user at K=2") {
    ChannelRealization r;
    r.M = 2;
    r.K = 2;
    r.G = ComplexMatrix(2, 2);
    // antenna 0: strong for user 0, antenna 1: strong for user 1 and overall
    r.G(0, 0) = cxd(2, 0);
    r.G(0, 1) = cxd(0.1, 0);
    r.G(1, 0) = cxd(0.2, 0);
    r.G(1, 1) = cxd(3, 0);
    r.g_eve = {cxd(1, 0), cxd(1, 0)};
    r.profile.beta_users = {1.0, 1.0};
    r.profile.beta_eve = 1.0;

    CHECK(select_strongest(r, 1).active_indices == std::vector<std::size_t>{1});
    CHECK(select_strongest(r, 1, 0).active_indices == std::vector<std::size_t>{0});
    CHECK(select_strongest(r, 1, 1).active_indices == std::vector<std::size_t>{1});
}

TEST_CASE("selection order is invariant to large-scale gain") {
    RngStream rng(8, 0);
    const ChannelRealization base = draw_realization(32, 1, uniform_profile(1), rng);
    ChannelRealization scaled = base;
    scaled.profile.beta_users = {3.7};
    CHECK(select_strongest(base, 5, 0).active_indices ==
          select_strongest(scaled, 5, 0).active_indices);
}

TEST_CASE("select_random: uniformity, full subset, determinism") {
    RngStream rng(9, 0);
    const ChannelRealization r = draw_realization(8, 1, uniform_profile(1), rng);

    SUBCASE("L = M returns the full set") {
        RngStream sel(9, 1);
        std::vector<std::size_t> idx = select_random(r, 8, sel).active_indices;
        std::sort(idx.begin(), idx.end());
        std::vector<std::size_t> all(8);
        std::iota(all.begin(), all.end(), 0);
        CHECK(idx == all);
    }

    SUBCASE("single pick is uniform over antennas") {
        std::vector<std::size_t> counts(8, 0);
        const std::size_t n = 100000;
        for (std::size_t t = 0; t < n; ++t) {
            RngStream sel(10, t);
            counts[select_random(r, 1, sel).active_indices[0]]++;
        }
        for (std::size_t i = 0; i < 8; ++i) {
            const double freq = static_cast<double>(counts[i]) / n;
            CHECK(std::fabs(freq - 0.125) < 0.01);
        }
    }

    SUBCASE("same stream, same subset") {
        RngStream s1(11, 3), s2(11, 3);
        CHECK(select_random(r, 3, s1).active_indices == select_random(r, 3, s2).active_indices);
    }

    RngStream sel(9, 2);
    CHECK_THROWS_AS(select_random(r, 9, sel), std::invalid_argument);
}

TEST_CASE("select_full is the identity reduction") {
    RngStream rng(12, 0);
    const ChannelRealization r = draw_realization(3, 2, uniform_profile(2, 2.0, 3.0), rng);
    const SelectionResult s = select_full(r);
    CHECK(s.active_indices == std::vector<std::size_t>{0, 1, 2});
    for (std::size_t k = 0; k < 2; ++k) {
        const ComplexVector h = effective_user_channel(r, k);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(s.H_eff(i, k) == h[i]); // bitwise
    }
    const ComplexVector he = effective_eve_channel(r);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(s.h_eve_eff[i] == he[i]);
}

TEST_CASE("eavesdropper is reduced by the same index set") {
    RngStream rng(13, 0);
    const ChannelRealization r = draw_realization(16, 1, uniform_profile(1, 1.0, 2.25), rng);
    const SelectionResult s = select_strongest(r, 4, 0);
    for (std::size_t j = 0; j < 4; ++j)
        CHECK(s.h_eve_eff[j] == 1.5 * r.g_eve[s.active_indices[j]]);
}

TEST_CASE("mrt_precoder: conjugate-and-normalize") {
    SelectionResult sel;
    sel.active_indices = {0, 1};
    sel.H_eff = ComplexMatrix(2, 1);
    sel.H_eff(0, 0) = cxd(1, 0);
    sel.H_eff(1, 0) = cxd(0, 0);
    sel.h_eve_eff = {cxd(0, 0), cxd(0, 0)};
    PrecodingMatrix pm = mrt_precoder(sel);
    CHECK(pm.W(0, 0) == cxd(1, 0));
    CHECK(pm.W(1, 0) == cxd(0, 0));

    SelectionResult one;
    one.active_indices = {0};
    one.H_eff = ComplexMatrix(1, 1);
    one.H_eff(0, 0) = cxd(3, 4);
    one.h_eve_eff = {cxd(0, 0)};
    pm = mrt_precoder(one);
    CHECK(pm.W(0, 0).real() == doctest::Approx(0.6));
    CHECK(pm.W(0, 0).imag() == doctest::Approx(-0.8));

    one.H_eff(0, 0) = cxd(0, 0);
    CHECK_THROWS_AS(mrt_precoder(one), std::domain_error);
}

TEST_CASE("mrt invariants on random draws: unit columns and |h^T w| = ||h||") {
    for (std::uint64_t t = 0; t < 20; ++t) {
        RngStream rng(14, t);
        const ChannelRealization r = draw_realization(16, 3, uniform_profile(3, 0.8), rng);
        const SelectionResult s = select_strongest(r, 8);
        const PrecodingMatrix pm = mrt_precoder(s);
        for (std::size_t k = 0; k < 3; ++k) {
            CHECK(std::fabs(squared_norm(pm.W.col(k)) - 1.0) <= 1e-12);
            const ComplexVector h = s.H_eff.col(k);
            const double coupling = std::abs(transpose_dot(h, pm.W.col(k)));
            CHECK(std::fabs(coupling - vector_norm(h)) <= 1e-12 * vector_norm(h));
        }
    }
}

TEST_CASE("zf_precoder: single user reduces to MRT, orthogonal columns too") {
    RngStream rng(15, 0);
    const ChannelRealization r = draw_realization(8, 1, uniform_profile(1), rng);
    const SelectionResult s = select_full(r);
    const PrecodingMatrix zf = zf_precoder(s);
    const PrecodingMatrix mrt = mrt_precoder(s);
    for (std::size_t i = 0; i < 8; ++i)
        CHECK(std::abs(zf.W(i, 0) - mrt.W(i, 0)) <= 1e-12);

    // orthogonal legitimate channels: ZF and MRT point the same way
    SelectionResult ortho;
    ortho.active_indices = {0, 1};
    ortho.H_eff = ComplexMatrix(2, 2);
    ortho.H_eff(0, 0) = cxd(2, 1);
    ortho.H_eff(1, 0) = cxd(0, 0);
    ortho.H_eff(0, 1) = cxd(0, 0);
    ortho.H_eff(1, 1) = cxd(0, -3);
    ortho.h_eve_eff = {cxd(0, 0), cxd(0, 0)};
    const PrecodingMatrix zf2 = zf_precoder(ortho);
    const PrecodingMatrix mrt2 = mrt_precoder(ortho);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            CHECK(std::abs(zf2.W(i, k) - mrt2.W(i, k)) <= 1e-12);
}

TEST_CASE("zf_precoder: interference nulling and feasibility") {
    for (std::uint64_t t = 0; t < 10; ++t) {
        RngStream rng(16, t);
        const ChannelRealization r = draw_realization(8, 3, uniform_profile(3), rng);
        const SelectionResult s = select_full(r);
        const PrecodingMatrix zf = zf_precoder(s);
        double min_diag = 1e300, max_off = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            for (std::size_t j = 0; j < 3; ++j) {
                const double mag = std::abs(transpose_dot(s.H_eff.col(k), zf.W.col(j)));
                if (j == k)
                    min_diag = std::min(min_diag, mag);
                else
                    max_off = std::max(max_off, mag);
            }
            CHECK(std::fabs(squared_norm(zf.W.col(k)) - 1.0) <= 1e-12);
        }
        CHECK(max_off < 1e-9 * min_diag);
    }

    RngStream rng(17, 0);
    const ChannelRealization tall = draw_realization(2, 3, uniform_profile(3), rng);
    CHECK_THROWS_AS(zf_precoder(select_full(tall)), std::domain_error);

    // duplicated user channels are rank deficient
    ChannelRealization dup;
    dup.M = 4;
    dup.K = 2;
    dup.G = ComplexMatrix(4, 2);
    for (std::size_t i = 0; i < 4; ++i) {
        dup.G(i, 0) = cxd(1.0 + i, 0.5);
        dup.G(i, 1) = dup.G(i, 0);
    }
    dup.g_eve.assign(4, cxd(0, 0.1));
    dup.profile.beta_users = {1.0, 1.0};
    dup.profile.beta_eve = 1.0;
    CHECK_THROWS_AS(zf_precoder(select_full(dup)), std::domain_error);
}

TEST_CASE("strongest with L = M is a permutation equivalent to full selection") {
    RngStream rng(18, 0);
    const ChannelRealization r = draw_realization(16, 2, uniform_profile(2), rng);
    const SelectionResult sorted = select_strongest(r, 16);
    std::vector<std::size_t> idx = sorted.active_indices;
    std::sort(idx.begin(), idx.end());
    std::vector<std::size_t> all(16);
    std::iota(all.begin(), all.end(), 0);
    CHECK(idx == all);

    // downstream rates agree with full selection (same sums, permuted order)
    const LinkBudget budget{1.0, 0.5};
    const PrecodingMatrix pm_sorted = mrt_precoder(sorted);
    const SelectionResult full = select_full(r);
    const PrecodingMatrix pm_full = mrt_precoder(full);
    for (std::size_t k = 0; k < 2; ++k) {
        const double a = sinr_legitimate(sorted, pm_sorted, k, budget);
        const double b = sinr_legitimate(full, pm_full, k, budget);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
        const double ea = snr_eavesdropper(sorted, pm_sorted, k, budget);
        const double eb = snr_eavesdropper(full, pm_full, k, budget);
        CHECK(ea == doctest::Approx(eb).epsilon(1e-12));
    }
}

TEST_CASE("eavesdropper entries look the same under strongest and random selection") {
    const std::size_t M = 64, L = 8, reps = 1250;
    std::vector<double> strongest_pool, random_pool;
    strongest_pool.reserve(reps * L);
    random_pool.reserve(reps * L);
    for (std::uint64_t t = 0; t < reps; ++t) {
        RngStream rng(19, t);
        const ChannelRealization r = draw_realization(M, 1, uniform_profile(1), rng);
        for (const cxd& v : select_strongest(r, L, 0).h_eve_eff)
            strongest_pool.push_back(std::norm(v));
        for (const cxd& v : select_random(r, L, rng).h_eve_eff)
            random_pool.push_back(std::norm(v));
    }
    const double d = oracle::ks_two_sample(strongest_pool, random_pool);
    CHECK(d < oracle::ks_two_sample_critical_1pct(strongest_pool.size(), random_pool.size()));

    // and both match the exponential law exactly
    const double d1 = ks_statistic(strongest_pool, [](double x) { return x <= 0 ? 0.0 : erlang_cdf(x, 1); });
    CHECK(d1 < ks_critical_1pct(strongest_pool.size()));
}
