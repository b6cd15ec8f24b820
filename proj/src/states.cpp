#include "qconc/states.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qconc {

namespace {
constexpr double kSimplexTol = 1e-12;
const double kInvSqrt6 = 1.0 / std::sqrt(6.0);
} // namespace

HouParams::HouParams(double q1, double q2, double q3, double q4)
    : q1(q1), q2(q2), q3(q3), q4(q4) {
    for (double q : {q1, q2, q3, q4})
        if (!(q >= 0.0))
            throw InvalidParams("HouParams: negative or non-finite parameter " +
                                std::to_string(q));
    const double sum = q1 + q2 + q3 + q4;
    if (std::abs(sum - 1.0) > kSimplexTol)
        throw InvalidParams("HouParams: parameters sum to " + std::to_string(sum));
}

ThetaSlice::ThetaSlice(double q2, double q4, double theta) : q2(q2), q4(q4), theta(theta) {
    if (!(q2 >= 0.0) || !(q4 >= 0.0) || q2 + q4 > 1.0 + kSimplexTol)
        throw InvalidParams("ThetaSlice: q2, q4 must be nonnegative with q2 + q4 <= 1");
    if (!(theta >= -1e-12) || theta > std::numbers::pi / 4.0 + 1e-12)
        throw InvalidParams("ThetaSlice: theta = " + std::to_string(theta) +
                            " outside [0, pi/4]");
}

DensityMatrix hou_state(const HouParams& q) {
    const std::array<double, 16> diag = {q.q1, q.q4, q.q3, q.q2, q.q2, q.q1, q.q4, q.q3,
                                         q.q3, q.q2, q.q1, q.q4, q.q4, q.q3, q.q2, q.q1};
    CMatrix m(16, 16);
    for (std::size_t i = 0; i < 16; ++i) m(i, i) = diag[i] / 4.0;
    const std::array<std::size_t, 4> corners = {0, 5, 10, 15};
    for (std::size_t i : corners)
        for (std::size_t j : corners)
            if (i != j) m(i, j) = q.q1 / 4.0;
    return DensityMatrix(4, std::move(m));
}

HouParams slice_to_params(const ThetaSlice& slice) {
    const double rest = 1.0 - slice.q2 - slice.q4;
    const double s = std::sin(slice.theta);
    const double c = std::cos(slice.theta);
    return HouParams(rest * s * s, slice.q2, rest * c * c, slice.q4);
}

double closed_phi(const HouParams& q) {
    return (q.q1 - q.q4 + std::abs(q.q1 - q.q4)) / (4.0 * std::sqrt(6.0));
}

double closed_ppt(const HouParams& q) {
    const double s = std::sqrt(4.0 * q.q1 * q.q1 + (q.q2 - q.q4) * (q.q2 - q.q4));
    return (2.0 * q.q1 + std::abs(q.q1 - q.q3) + std::abs(q.q2 + q.q4 - s) + s - 1.0) /
           (2.0 * std::sqrt(6.0));
}

double closed_realign(const HouParams& q) {
    const double cross =
        std::sqrt((q.q1 - q.q3) * (q.q1 - q.q3) + (q.q2 - q.q4) * (q.q2 - q.q4));
    return kInvSqrt6 *
           (3.0 * q.q1 + 0.25 * (std::abs(q.q1 - q.q2 + q.q3 - q.q4) + 2.0 * cross - 3.0));
}

double closed_witness(const HouParams& q) {
    return -(q.q2 + 2.0 * q.q3 + q.q4) / (2.0 * std::sqrt(6.0));
}

std::vector<double> hou_eigenvalues(const HouParams& q) {
    std::vector<double> out;
    out.reserve(16);
    for (int k = 0; k < 4; ++k) out.push_back((q.q1 + 2.0 * q.q2) / 4.0);
    for (int k = 0; k < 4; ++k) out.push_back((q.q2 + 2.0 * q.q3) / 4.0);
    for (int k = 0; k < 4; ++k) out.push_back((q.q3 + 2.0 * q.q4) / 4.0);
    out.push_back((q.q4 - q.q1) / 4.0);
    for (int k = 0; k < 3; ++k) out.push_back((3.0 * q.q1 + q.q4) / 4.0);
    return out;
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

SchmidtVector random_schmidt(std::size_t n, Rng& rng) {
    std::vector<double> alphas(n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& a : alphas) {
            a = std::abs(rng.gaussian());
            norm2 += a * a;
        }
    } while (norm2 < 1e-30);
    const double scale = 1.0 / std::sqrt(norm2);
    for (double& a : alphas) a *= scale;
    return SchmidtVector(std::move(alphas));
}

SchmidtVector random_schmidt(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_schmidt(n, rng);
}

PureState random_pure(std::size_t n, Rng& rng) {
    std::vector<Complex> amps(n * n);
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (Complex& z : amps) {
            z = rng.gaussian_complex();
            norm2 += std::norm(z);
        }
    } while (norm2 < 1e-30);
    const double scale = 1.0 / std::sqrt(norm2);
    for (Complex& z : amps) z *= scale;
    return PureState(n, std::move(amps));
}

PureState random_pure(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return random_pure(n, rng);
}

DensityMatrix random_density(std::size_t n, std::size_t rank, Rng& rng) {
    const std::size_t d2 = n * n;
    if (rank < 1 || rank > d2)
        throw BadRank("random_density: rank " + std::to_string(rank) + " outside [1, " +
                      std::to_string(d2) + "]");
    CMatrix g(d2, rank);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < rank; ++j) g(i, j) = rng.gaussian_complex();
    CMatrix rho = g * dagger(g);
    const double tr = rho.trace().real();
    rho = (1.0 / tr) * rho;
    return DensityMatrix(n, std::move(rho));
}

DensityMatrix random_density(std::size_t n, std::size_t rank, std::uint64_t seed) {
    Rng rng(seed);
    return random_density(n, rank, rng);
}

CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
    if (cols > rows) throw ShapeMismatch("random_isometry: cols > rows");
    CMatrix q(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        // Draw column j, orthogonalize against earlier columns, redraw on a
        // degenerate pivot.
        while (true) {
            for (std::size_t i = 0; i < rows; ++i) q(i, j) = rng.gaussian_complex();
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t k = 0; k < j; ++k) {
                    Complex overlap = 0.0;
                    for (std::size_t i = 0; i < rows; ++i) overlap += std::conj(q(i, k)) * q(i, j);
                    for (std::size_t i = 0; i < rows; ++i) q(i, j) -= overlap * q(i, k);
                }
            }
            double norm2 = 0.0;
            for (std::size_t i = 0; i < rows; ++i) norm2 += std::norm(q(i, j));
            if (norm2 > 1e-12) {
                const double scale = 1.0 / std::sqrt(norm2);
                for (std::size_t i = 0; i < rows; ++i) q(i, j) *= scale;
                break;
            }
        }
    }
    return q;
}

CMatrix random_unitary(std::size_t n, Rng& rng) { return random_isometry(n, n, rng); }

} // namespace qconc
