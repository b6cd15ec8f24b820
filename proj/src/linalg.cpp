#include "qconc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

namespace qconc {

namespace {

constexpr double kHermitianTol = 1e-8;
constexpr double kOffDiagonalFactor = 1e-13;  // convergence: off(A) <= factor * ||A||_F
constexpr int kMaxSweeps = 100;

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeMismatch(std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
}

double off_diagonal_norm(const CMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

} // namespace

// ---------------------------------------------------------------------------
// CMatrix
// ---------------------------------------------------------------------------

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
        throw InvalidParams("CMatrix: dimensions must be positive");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0)
        throw InvalidParams("CMatrix: dimensions must be positive");
    if (data_.size() != rows * cols)
        throw InvalidParams("CMatrix: entry count " + std::to_string(data_.size()) +
                            " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidParams("CMatrix: non-finite entry");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
    CMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Complex CMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::hermiticity_error() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double err = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            err = std::max(err, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return err;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator+");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "operator-");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeMismatch("operator*: inner dimensions " + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()));
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

CMatrix operator*(Complex s, const CMatrix& a) {
    CMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

CMatrix dagger(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

// ---------------------------------------------------------------------------
// Spectral routines
// ---------------------------------------------------------------------------

// One cyclic Jacobi rotation annihilating the (p,q) entry of the Hermitian
// working matrix w. The unitary is accumulated into v when present.
namespace {

void jacobi_rotate(CMatrix& w, CMatrix* v, std::size_t p, std::size_t q) {
    const Complex apq = w(p, q);
    const double mag = std::abs(apq);
    if (mag < 1e-280) return;

    const double app = w(p, p).real();
    const double aqq = w(q, q).real();
    const double theta = (aqq - app) / (2.0 * mag);
    const double sign = theta >= 0.0 ? 1.0 : -1.0;
    const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const Complex phase = apq / mag;
    const Complex phase_conj = std::conj(phase);

    const std::size_t n = w.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const Complex akp = w(k, p);
        const Complex akq = w(k, q);
        w(k, p) = c * akp - s * phase_conj * akq;
        w(k, q) = s * phase * akp + c * akq;
        w(p, k) = std::conj(w(k, p));
        w(q, k) = std::conj(w(k, q));
    }
    w(p, p) = app - t * mag;
    w(q, q) = aqq + t * mag;
    w(p, q) = 0.0;
    w(q, p) = 0.0;

    if (v) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = (*v)(k, p);
            const Complex vkq = (*v)(k, q);
            (*v)(k, p) = c * vkp - s * phase_conj * vkq;
            (*v)(k, q) = s * phase * vkp + c * vkq;
        }
    }
}

} // namespace

Spectrum hermitian_eigs(const CMatrix& a, bool want_vectors) {
    if (!a.is_square())
        throw ShapeMismatch("hermitian_eigs: matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
    const double herm_err = a.hermiticity_error();
    if (herm_err > kHermitianTol)
        throw NonHermitian("hermitian_eigs: max|A - A^dagger| = " + std::to_string(herm_err));

    const std::size_t n = a.rows();

    // Work on the exactly Hermitian part (A + A^dagger)/2.
    CMatrix w(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        w(i, i) = Complex(a(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z = 0.5 * (a(i, j) + std::conj(a(j, i)));
            w(i, j) = z;
            w(j, i) = std::conj(z);
        }
    }

    std::optional<CMatrix> vectors;
    if (want_vectors) vectors = CMatrix::identity(n);
    CMatrix* vptr = vectors ? &*vectors : nullptr;

    const double fro = w.frobenius_norm();
    const double target = kOffDiagonalFactor * fro;

    bool converged = off_diagonal_norm(w) <= target;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(w, vptr, p, q);
        converged = off_diagonal_norm(w) <= target;
    }
    if (!converged)
        throw NoConvergence("hermitian_eigs: off-diagonal mass above threshold after " +
                            std::to_string(kMaxSweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

    Spectrum spec;
    spec.eigenvalues.reserve(n);
    for (std::size_t i : order) spec.eigenvalues.push_back(w(i, i).real());
    if (vectors) {
        CMatrix sorted(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) sorted(i, j) = (*vectors)(i, order[j]);
        spec.eigenvectors = std::move(sorted);
    }
    return spec;
}

std::vector<double> singular_values(const CMatrix& a) {
    const CMatrix gram = dagger(a) * a;
    Spectrum spec = hermitian_eigs(gram, false);
    std::vector<double> sv;
    sv.reserve(spec.eigenvalues.size());
    for (auto it = spec.eigenvalues.rbegin(); it != spec.eigenvalues.rend(); ++it)
        sv.push_back(std::sqrt(std::max(0.0, *it)));
    sv.resize(std::min(a.rows(), a.cols()));
    return sv;
}

double trace_norm(const CMatrix& a) {
    if (a.is_hermitian(kHermitianTol)) {
        Spectrum spec = hermitian_eigs(a, false);
        double sum = 0.0;
        for (double ev : spec.eigenvalues) sum += std::abs(ev);
        return sum;
    }
    const std::vector<double> sv = singular_values(a);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

} // namespace qconc
