// SPDX-License-Identifier: Apache-2.0

#include "mimosec/rates.hpp"

#include <cmath>
#include <stdexcept>

namespace mimosec {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void check_dims(const SelectionResult& selection, const PrecodingMatrix& precoder,
                std::size_t k) {
    if (precoder.W.rows != selection.H_eff.rows || precoder.W.cols != selection.H_eff.cols)
        throw std::invalid_argument("rates: precoder/selection dimension mismatch");
    if (k >= selection.H_eff.cols)
        throw std::invalid_argument("rates: user index out of range");
    if (selection.h_eve_eff.size() != selection.H_eff.rows)
        throw std::invalid_argument("rates: eavesdropper channel length mismatch");
}

// |h^T w|^2 with h = column k_h of H_eff and w = column k_w of W.
double coupling_power(const ComplexMatrix& h, std::size_t k_h, const ComplexMatrix& w,
                      std::size_t k_w) {
    cxd acc(0.0, 0.0);
    for (std::size_t l = 0; l < h.rows; ++l)
        acc += h(l, k_h) * w(l, k_w);
    return std::norm(acc);
}

} // namespace

double sinr_legitimate(const SelectionResult& selection, const PrecodingMatrix& precoder,
                       std::size_t k, const LinkBudget& budget) {
    check_dims(selection, precoder, k);
    const ComplexMatrix& h = selection.H_eff;
    const ComplexMatrix& w = precoder.W;
    const double signal = coupling_power(h, k, w, k);
    double interference = 0.0;
    for (std::size_t j = 0; j < w.cols; ++j)
        if (j != k)
            interference += coupling_power(h, k, w, j);
    return budget.rho_m * signal / (1.0 + budget.rho_m * interference);
}

double snr_eavesdropper(const SelectionResult& selection, const PrecodingMatrix& precoder,
                        std::size_t k, const LinkBudget& budget) {
    check_dims(selection, precoder, k);
    cxd acc(0.0, 0.0);
    for (std::size_t l = 0; l < selection.h_eve_eff.size(); ++l)
        acc += selection.h_eve_eff[l] * precoder.W(l, k);
    return budget.rho_e * std::norm(acc);
}

double rate_main(double sinr) {
    if (sinr < 0.0)
        throw std::invalid_argument("rate_main: sinr must be nonnegative");
    return std::log1p(sinr) / kLn2;
}

double rate_secrecy(double rate_main_bits, double rate_eve_bits) {
    if (rate_main_bits < 0.0 || rate_eve_bits < 0.0)
        throw std::invalid_argument("rate_secrecy: rates must be nonnegative");
    const double diff = rate_main_bits - rate_eve_bits;
    return diff > 0.0 ? diff : 0.0;
}

double relative_secrecy_cost(double rate_main_bits, double rate_secrecy_bits) {
    if (rate_secrecy_bits < 0.0 || rate_main_bits < 0.0)
        throw std::invalid_argument("relative_secrecy_cost: rates must be nonnegative");
    if (rate_secrecy_bits > rate_main_bits)
        throw std::invalid_argument("relative_secrecy_cost: secrecy rate exceeds main rate");
    if (rate_main_bits == 0.0)
        return 0.0;
    return 1.0 - rate_secrecy_bits / rate_main_bits;
}

RateReport evaluate_realization(const ChannelRealization& realization,
                                const SelectionSpec& selection, PrecoderScheme scheme,
                                const LinkBudget& budget, RngStream& rng) {
    const SelectionResult sel = apply_selection(realization, selection, rng);
    const PrecodingMatrix pm = make_precoder(sel, scheme);

    RateReport report;
    report.user.resize(realization.K);
    for (std::size_t k = 0; k < realization.K; ++k) {
        UserRate& u = report.user[k];
        u.sinr_m = sinr_legitimate(sel, pm, k, budget);
        u.snr_e = snr_eavesdropper(sel, pm, k, budget);
        u.rate_main = rate_main(u.sinr_m);
        u.rate_eve = rate_main(u.snr_e);
        u.rate_secrecy = rate_secrecy(u.rate_main, u.rate_eve);
        u.cost = relative_secrecy_cost(u.rate_main, u.rate_secrecy);
    }
    return report;
}

} // namespace mimosec
