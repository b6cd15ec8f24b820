#pragma once

// Shared helpers for the test binaries.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qconc/linalg.hpp"
#include "qconc/rng.hpp"

namespace testhelp {

inline qconc::CMatrix random_hermitian(std::size_t n, qconc::Rng& rng) {
    qconc::CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = rng.gaussian();
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = rng.gaussian_complex();
            a(j, i) = std::conj(a(i, j));
        }
    }
    return a;
}

inline qconc::CMatrix random_matrix(std::size_t rows, std::size_t cols, qconc::Rng& rng) {
    qconc::CMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.gaussian_complex();
    return a;
}

// Largest deviation between two value lists compared as sorted multisets.
inline double multiset_diff(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Coefficients of det(xI - A) as (1, c_1, ..., c_n) with c_k the coefficient
// of x^{n-k}, by the Faddeev-LeVerrier recursion. Uses only matrix products
// and traces, so it is independent of any eigensolver.
inline std::vector<double> faddeev_leverrier(const qconc::CMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    qconc::CMatrix m = a;
    for (std::size_t k = 1; k <= n; ++k) {
        c[k] = -m.trace().real() / static_cast<double>(k);
        if (k == n) break;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[k];
        m = a * m;
    }
    return c;
}

// (I ox Phi) rho for an arbitrary block map, used by the mutation test.
template <typename MapFn>
qconc::CMatrix apply_block_map(const qconc::CMatrix& rho, std::size_t n, MapFn map) {
    qconc::CMatrix out(n * n, n * n);
    qconc::CMatrix block(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    block(b, b2) = rho(a * n + b, a2 * n + b2);
            const qconc::CMatrix mapped = map(block);
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    out(a * n + b, a2 * n + b2) = mapped(b, b2);
        }
    return out;
}

} // namespace testhelp
