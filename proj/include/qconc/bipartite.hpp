#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qconc/linalg.hpp"

namespace qconc {

/// Default validation tolerance for density-matrix invariants.
inline constexpr double kDensityTol = 1e-10;

/// Pure state on an N x N bipartite system. Composite basis label (a, b)
/// maps to index a*N + b, zero-based, with a on the first factor.
class PureState {
public:
    /// Throws ShapeMismatch unless amplitudes has length N^2; NormViolation
    /// unless the Euclidean norm is 1 within 1e-12.
    PureState(std::size_t dim, std::vector<Complex> amplitudes);

    std::size_t dim() const { return dim_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    const Complex& amplitude(std::size_t composite) const { return amps_[composite]; }

private:
    std::size_t dim_;
    std::vector<Complex> amps_;
};

/// Schmidt coefficients of a bipartite pure state, stored descending.
class SchmidtVector {
public:
    /// Sorts descending. Throws InvalidParams on negative entries,
    /// NormViolation unless sum of squares is 1 within 1e-12.
    explicit SchmidtVector(std::vector<double> alphas);

    std::size_t dim() const { return alphas_.size(); }
    std::span<const double> alphas() const { return alphas_; }
    double alpha(std::size_t i) const { return alphas_[i]; }

private:
    std::vector<double> alphas_;
};

/// Validated bipartite density matrix: N^2 x N^2, Hermitian, unit trace,
/// positive semidefinite (each within the construction tolerance).
class DensityMatrix {
public:
    DensityMatrix(std::size_t dim, CMatrix matrix, double tol = kDensityTol);

    std::size_t dim() const { return dim_; }
    const CMatrix& matrix() const { return matrix_; }

private:
    std::size_t dim_;
    CMatrix matrix_;
};

/// rho = |psi><psi|.
DensityMatrix density_from_pure(const PureState& psi);

/// Reduced state of the first factor: (rho1)_{a,a'} = sum_b rho_{(a,b),(a',b)}.
CMatrix partial_trace_second(const DensityMatrix& rho);

/// Partial transpose on the first factor:
/// out_{(a,b),(a',b')} = rho_{(a',b),(a,b')}.
CMatrix partial_transpose_first(const DensityMatrix& rho);

/// Realigned matrix: out_{(a,a'),(b,b')} = rho_{(a,b),(a',b')}.
/// Generally not Hermitian.
CMatrix realign(const DensityMatrix& rho);

/// Schmidt coefficients via the singular values of the N x N coefficient
/// matrix C_{a,b} = amplitude(a*N + b).
SchmidtVector schmidt_decompose(const PureState& psi);

/// Diagonal embedding: amplitude alpha_i at composite index i*N + i.
PureState pure_from_schmidt(const SchmidtVector& alpha);

} // namespace qconc
