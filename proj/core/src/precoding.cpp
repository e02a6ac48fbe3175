// SPDX-License-Identifier: Apache-2.0

#include "mimosec/precoding.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace mimosec {

namespace {

// In-place Gaussian elimination with partial pivoting; returns A^-1 for a
// small K x K system. Throws std::domain_error when a pivot collapses.
ComplexMatrix invert_small(ComplexMatrix a) {
    const std::size_t n = a.rows;
    ComplexMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        inv(i, i) = cxd(1.0, 0.0);

    double scale = 0.0;
    for (const cxd& v : a.entries)
        scale = std::max(scale, std::abs(v));
    if (scale == 0.0)
        throw std::domain_error("zf_precoder: zero Gram matrix");

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best < 1e-13 * scale)
            throw std::domain_error("zf_precoder: rank-deficient reduced channel");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(pivot, c), a(col, c));
                std::swap(inv(pivot, c), inv(col, c));
            }
        }
        const cxd d = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const cxd factor = a(r, col);
            if (factor == cxd(0.0, 0.0))
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= factor * a(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

void normalize_columns(ComplexMatrix& w) {
    for (std::size_t k = 0; k < w.cols; ++k) {
        double nrm2 = 0.0;
        for (std::size_t r = 0; r < w.rows; ++r)
            nrm2 += std::norm(w(r, k));
        if (nrm2 <= 0.0)
            throw std::domain_error("precoder: degenerate zero column");
        const double inv_nrm = 1.0 / std::sqrt(nrm2);
        for (std::size_t r = 0; r < w.rows; ++r)
            w(r, k) *= inv_nrm;
    }
}

} // namespace

PrecodingMatrix mrt_precoder(const SelectionResult& selection) {
    const ComplexMatrix& h = selection.H_eff;
    PrecodingMatrix pm;
    pm.scheme = PrecoderScheme::MRT;
    pm.W = ComplexMatrix(h.rows, h.cols);
    for (std::size_t k = 0; k < h.cols; ++k)
        for (std::size_t r = 0; r < h.rows; ++r)
            pm.W(r, k) = std::conj(h(r, k));
    normalize_columns(pm.W);
    return pm;
}

PrecodingMatrix zf_precoder(const SelectionResult& selection) {
    const ComplexMatrix& h = selection.H_eff;
    const std::size_t L = h.rows;
    const std::size_t K = h.cols;
    if (K > L)
        throw std::domain_error("zf_precoder: infeasible, K exceeds active antennas");

    // Gram matrix A = H^T conj(H), A(k,j) = sum_l H(l,k) conj(H(l,j)).
    ComplexMatrix gram(K, K);
    for (std::size_t k = 0; k < K; ++k)
        for (std::size_t j = 0; j < K; ++j) {
            cxd acc(0.0, 0.0);
            for (std::size_t l = 0; l < L; ++l)
                acc += h(l, k) * std::conj(h(l, j));
            gram(k, j) = acc;
        }

    const ComplexMatrix gram_inv = invert_small(std::move(gram));

    PrecodingMatrix pm;
    pm.scheme = PrecoderScheme::ZF;
    pm.W = ComplexMatrix(L, K);
    for (std::size_t l = 0; l < L; ++l)
        for (std::size_t k = 0; k < K; ++k) {
            cxd acc(0.0, 0.0);
            for (std::size_t j = 0; j < K; ++j)
                acc += std::conj(h(l, j)) * gram_inv(j, k);
            pm.W(l, k) = acc;
        }
    normalize_columns(pm.W);
    return pm;
}

PrecodingMatrix make_precoder(const SelectionResult& selection, PrecoderScheme scheme) {
    return scheme == PrecoderScheme::MRT ? mrt_precoder(selection) : zf_precoder(selection);
}

} // namespace mimosec
