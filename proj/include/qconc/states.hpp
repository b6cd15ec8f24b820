#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qconc/bipartite.hpp"
#include "qconc/linalg.hpp"
#include "qconc/rng.hpp"

namespace qconc {

/// Parameters of the four-parameter 4x4 example family. Nonnegative,
/// summing to 1 within 1e-12.
struct HouParams {
    double q1, q2, q3, q4;
    HouParams(double q1, double q2, double q3, double q4);
};

/// One point of the bound-comparison slice: q2 and q4 fixed,
/// q1 = (1 - q2 - q4) sin^2(theta), q3 = (1 - q2 - q4) cos^2(theta),
/// theta in [0, pi/4].
struct ThetaSlice {
    double q2, q4, theta;
    ThetaSlice(double q2, double q4, double theta);
};

/// The example state (N = 4): diagonal (1/4)(q1,q4,q3,q2, q2,q1,q4,q3,
/// q3,q2,q1,q4, q4,q3,q2,q1) plus q1/4 at every off-diagonal position
/// among the composite indices {0, 5, 10, 15}.
DensityMatrix hou_state(const HouParams& q);

HouParams slice_to_params(const ThetaSlice& slice);

// Closed forms of the four bounds on the family, kept verbatim so they can
// serve as independent oracles for the numeric path.
double closed_phi(const HouParams& q);
double closed_ppt(const HouParams& q);
double closed_realign(const HouParams& q);
double closed_witness(const HouParams& q);

/// The 16 published eigenvalues of (I4 ox Phi) applied to the family state:
/// (q1+2q2)/4 x4, (q2+2q3)/4 x4, (q3+2q4)/4 x4, (q4-q1)/4, (3q1+q4)/4 x3.
std::vector<double> hou_eigenvalues(const HouParams& q);

// ---------------------------------------------------------------------------
// Seeded random generators (deterministic in the seed)
// ---------------------------------------------------------------------------

SchmidtVector random_schmidt(std::size_t n, Rng& rng);
SchmidtVector random_schmidt(std::size_t n, std::uint64_t seed);

PureState random_pure(std::size_t n, Rng& rng);
PureState random_pure(std::size_t n, std::uint64_t seed);

/// rho = G G^dagger / trace(G G^dagger) with G an N^2 x rank complex
/// Gaussian matrix. Throws BadRank unless 1 <= rank <= N^2.
DensityMatrix random_density(std::size_t n, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t n, std::size_t rank, std::uint64_t seed);

/// Columns are orthonormal (Gram-Schmidt on a complex Gaussian matrix).
CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);
CMatrix random_unitary(std::size_t n, Rng& rng);

} // namespace qconc
