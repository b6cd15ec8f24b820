#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qconc/bipartite.hpp"
#include "qconc/linalg.hpp"

namespace qconc {

struct CheckResult {
    bool pass = true;
    std::string details;  // offending quantities on failure, empty on pass
};

/// Spectral summary of the B matrix of a Schmidt vector, together with the
/// root-relation verdicts: sum of roots N-2, product of roots
/// -(N-1)^{N-1} prod alpha_i^2, at most one negative root, and
/// min root >= -sum_{i<j} alpha_i alpha_j.
struct RootReport {
    SchmidtVector alphas;
    std::vector<double> b_eigenvalues;  // ascending
    double sum_roots = 0.0;
    double prod_roots = 0.0;
    double min_root = 0.0;
    bool ok = true;
    std::string violation;
};

/// Pure-state concurrence 2 sqrt(sum_{i<j} alpha_i^2 alpha_j^2).
double pure_concurrence(const SchmidtVector& alpha);

/// Real symmetric N x N matrix with diagonal (N-2) alpha_i^2 and
/// off-diagonal -alpha_i alpha_j; carries the nontrivial part of the
/// spectrum of (I ox Phi)|psi><psi| for Schmidt-diagonal psi.
CMatrix b_matrix(const SchmidtVector& alpha);

/// Elementary symmetric polynomials e_0..e_n of the given values,
/// by stable product expansion.
std::vector<double> elementary_symmetric(std::span<const double> values);

/// Verifies that the singular values of (I ox Phi)|psi><psi| are
/// {0 x (N^2-2N)} + {alpha_i^2} + sv(B) within tol.
CheckResult t_structure_check(const SchmidtVector& alpha, double tol);

/// Verifies the characteristic-polynomial coefficient pattern of B:
/// coefficient of x^{N-k} equals (-1)^k (N-1-k)(N-1)^{k-1} e_k(alpha^2).
/// tol is relative to the cancellation-free coefficient mass e_k(|x|).
CheckResult charpoly_check(const SchmidtVector& alpha, double tol);

RootReport root_relations_check(const SchmidtVector& alpha);

/// Verifies ||T|| - (N-1) <= 2 sum_{i<j} alpha_i alpha_j on both algebraic
/// routes (full trace norm and B spectrum), and that the routes agree.
CheckResult functional_property_check(const SchmidtVector& alpha);

/// Verifies sum_{i<j} alpha_i^2 alpha_j^2 >=
/// (2/(N(N-1))) (sum_{i<j} alpha_i alpha_j)^2.
CheckResult chen_inequality_check(const SchmidtVector& alpha);

/// Sampled upper estimate of the convex-roof concurrence: minimum ensemble
/// average over random pure-state decompositions of rho, generated by mixing
/// the eigendecomposition through random isometries with output dimension
/// between rank and rank+2 (capped at N^2). Always >= C(rho).
double convex_roof_upper(const DensityMatrix& rho, std::size_t n_samples = 200,
                         std::uint64_t seed = 1);

} // namespace qconc
