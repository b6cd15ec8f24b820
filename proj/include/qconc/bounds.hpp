#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qconc/bipartite.hpp"
#include "qconc/linalg.hpp"

namespace qconc {

/// A bound value above this counts as an entanglement detection.
inline constexpr double kDetectionTol = 1e-9;

/// The positive (not completely positive) map behind the phi bound:
/// off-diagonal entries are negated, diagonal entries become
/// (N-2) a_ii + a_{i'i'} with i' = (i+1) mod N.
CMatrix phi_map(const CMatrix& a, std::size_t n);

/// Apply the map to the second factor: every N x N block of rho (blocks
/// indexed by first-factor labels) is passed through phi_map. Hermitian
/// whenever rho is.
CMatrix apply_id_phi(const DensityMatrix& rho);

/// sqrt(2 / (N (N-1))) * f_value. Sign is preserved; throws BadDimension
/// for N < 2.
double bound_from_functional(double f_value, std::size_t n);

/// Concurrence lower bound from the positive map:
/// bound_from_functional(||(I ox Phi) rho|| - (N-1), N).
double phi_bound(const DensityMatrix& rho);

/// Concurrence lower bound from the PPT criterion: f = ||rho^{T1}|| - 1.
double ppt_bound(const DensityMatrix& rho);

/// Concurrence lower bound from the realignment criterion: f = ||rho~|| - 1.
double realign_bound(const DensityMatrix& rho);

/// All bounds for one state, with the underlying trace norms.
/// Each bound equals sqrt(2/(N(N-1))) times (trace norm minus its offset).
struct BoundReport {
    std::size_t n = 0;
    double phi_trace_norm = 0.0;
    double ppt_trace_norm = 0.0;
    double realign_trace_norm = 0.0;
    double phi_bound = 0.0;
    double ppt_bound = 0.0;
    double realign_bound = 0.0;
    std::optional<double> witness_bound;      // Hou family only
    std::vector<std::string> detected_by;     // labels with bound > detection tol
};

BoundReport evaluate_bounds(const DensityMatrix& rho, double detection_tol = kDetectionTol);

} // namespace qconc
