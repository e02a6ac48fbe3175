// SPDX-License-Identifier: Apache-2.0
//
// mimosec -- Monte Carlo link-level simulator for secrecy rates in multiuser
// massive MIMO wiretap channels under linear precoding and antenna selection.

#ifndef MIMOSEC_LINALG_HPP
#define MIMOSEC_LINALG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mimosec {

using cxd = std::complex<double>;

// Dense complex vector; houses channel and precoder coefficients.
using ComplexVector = std::vector<cxd>;

// Dense complex matrix, row-major storage.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cxd> entries; // rows * cols, row-major

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    cxd& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const cxd& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    ComplexVector col(std::size_t c) const {
        if (c >= cols)
            throw std::invalid_argument("ComplexMatrix::col: column index out of range");
        ComplexVector v(rows);
        for (std::size_t r = 0; r < rows; ++r)
            v[r] = entries[r * cols + c];
        return v;
    }
};

// sum_i a_i * conj(b_i). Conjugation is applied to the second argument, so
// a^T w with an explicit precoder column w is transpose_dot(a, w) below,
// while inner_product_t(h, h) is the squared norm of h.
inline cxd inner_product_t(const ComplexVector& a, const ComplexVector& b_conjugated) {
    if (a.size() != b_conjugated.size())
        throw std::invalid_argument("inner_product_t: length mismatch");
    cxd acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * std::conj(b_conjugated[i]);
    return acc;
}

// Plain bilinear sum_i a_i * b_i (no conjugation), i.e. a^T b.
inline cxd transpose_dot(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("transpose_dot: length mismatch");
    cxd acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

inline double squared_norm(const ComplexVector& v) {
    double acc = 0.0;
    for (const cxd& x : v)
        acc += std::norm(x);
    return acc;
}

inline double vector_norm(const ComplexVector& v) {
    return std::sqrt(squared_norm(v));
}

// Gathers v at the given indices, in index-list order.
inline ComplexVector reduce_vector(const ComplexVector& v, const std::vector<std::size_t>& indices) {
    ComplexVector out(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
        if (indices[j] >= v.size())
            throw std::invalid_argument("reduce_vector: index out of range");
        out[j] = v[indices[j]];
    }
    return out;
}

} // namespace mimosec

#endif
