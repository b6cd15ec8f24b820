#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qconc/errors.hpp"

namespace qconc {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage of (re, im) double pairs.
/// Entries are validated to be finite when constructed from raw data.
class CMatrix {
public:
    /// Zero matrix of the given shape.
    CMatrix(std::size_t rows, std::size_t cols);

    /// From row-major entries; throws InvalidParams on length mismatch or
    /// non-finite components.
    CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const double> values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const { return data_; }

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;

    /// max_{ij} |a_ij - conj(a_ji)|; infinity for non-square matrices.
    double hermiticity_error() const;
    bool is_hermitian(double tol) const { return is_square() && hermiticity_error() <= tol; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(Complex s, const CMatrix& a);
CMatrix operator*(double s, const CMatrix& a);

/// max_{ij} |a_ij - b_ij|; throws ShapeMismatch on shape disagreement.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Kronecker product: block (i,j) of the result is a_ij * b.
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Conjugate transpose.
CMatrix dagger(const CMatrix& a);

/// Plain transpose (no conjugation).
CMatrix transpose(const CMatrix& a);

struct Spectrum {
    std::vector<double> eigenvalues;       // ascending
    std::optional<CMatrix> eigenvectors;   // columns, same order as eigenvalues
};

/// Eigenvalues (and optionally eigenvectors) of a Hermitian matrix via
/// cyclic Jacobi rotations. Requires max|A - A^dagger| <= 1e-8, else throws
/// NonHermitian. Throws NoConvergence after 100 sweeps.
Spectrum hermitian_eigs(const CMatrix& a, bool want_vectors = false);

/// Singular values, descending: square roots of the eigenvalues of A^dagger A
/// (negative eigenvalues clamped to zero). Returns min(rows, cols) values.
std::vector<double> singular_values(const CMatrix& a);

/// Sum of singular values. Hermitian inputs (within 1e-8) are routed through
/// the eigenvalue path as sum |lambda_i|.
double trace_norm(const CMatrix& a);

} // namespace qconc
