#include "qconc/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

namespace qconc {

PureState::PureState(std::size_t dim, std::vector<Complex> amplitudes)
    : dim_(dim), amps_(std::move(amplitudes)) {
    if (dim_ == 0) throw InvalidParams("PureState: dimension must be positive");
    if (amps_.size() != dim_ * dim_)
        throw ShapeMismatch("PureState: expected " + std::to_string(dim_ * dim_) +
                            " amplitudes, got " + std::to_string(amps_.size()));
    double norm2 = 0.0;
    for (const Complex& z : amps_) norm2 += std::norm(z);
    if (std::abs(norm2 - 1.0) > 1e-12)
        throw NormViolation("PureState: |amplitudes|^2 = " + std::to_string(norm2));
}

SchmidtVector::SchmidtVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw InvalidParams("SchmidtVector: empty coefficient list");
    double sum2 = 0.0;
    for (double a : alphas_) {
        if (!(a >= 0.0) || a > 1.0 + 1e-12)
            throw InvalidParams("SchmidtVector: coefficient " + std::to_string(a) +
                                " outside [0, 1]");
        sum2 += a * a;
    }
    if (std::abs(sum2 - 1.0) > 1e-12)
        throw NormViolation("SchmidtVector: sum of squares = " + std::to_string(sum2));
    std::sort(alphas_.begin(), alphas_.end(), std::greater<double>());
}

DensityMatrix::DensityMatrix(std::size_t dim, CMatrix matrix, double tol)
    : dim_(dim), matrix_(std::move(matrix)) {
    if (dim_ == 0) throw InvalidParams("DensityMatrix: dimension must be positive");
    const std::size_t d2 = dim_ * dim_;
    if (matrix_.rows() != d2 || matrix_.cols() != d2)
        throw ShapeMismatch("DensityMatrix: expected " + std::to_string(d2) + "x" +
                            std::to_string(d2) + ", got " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()));

    const double herm = matrix_.hermiticity_error();
    if (herm > tol)
        throw NonHermitian("DensityMatrix: not Hermitian, max|rho - rho^dagger| = " +
                           std::to_string(herm) + " > " + std::to_string(tol));

    const double trace_err = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (trace_err > tol)
        throw NormViolation("DensityMatrix: |trace - 1| = " + std::to_string(trace_err) + " > " +
                            std::to_string(tol));

    // PSD check on the symmetrized matrix so a caller-supplied tolerance
    // above 1e-8 still validates.
    CMatrix sym = 0.5 * (matrix_ + dagger(matrix_));
    const Spectrum spec = hermitian_eigs(sym, false);
    if (spec.eigenvalues.front() < -tol)
        throw InvalidParams("DensityMatrix: not positive semidefinite, min eigenvalue = " +
                            std::to_string(spec.eigenvalues.front()));
}

DensityMatrix density_from_pure(const PureState& psi) {
    const std::size_t d2 = psi.dim() * psi.dim();
    CMatrix rho(d2, d2);
    for (std::size_t i = 0; i < d2; ++i)
        for (std::size_t j = 0; j < d2; ++j)
            rho(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
    return DensityMatrix(psi.dim(), std::move(rho));
}

CMatrix partial_trace_second(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const CMatrix& m = rho.matrix();
    CMatrix out(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t a2 = 0; a2 < n; ++a2) {
            Complex sum = 0.0;
            for (std::size_t b = 0; b < n; ++b) sum += m(a * n + b, a2 * n + b);
            out(a, a2) = sum;
        }
    return out;
}

CMatrix partial_transpose_first(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const CMatrix& m = rho.matrix();
    CMatrix out(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    out(a * n + b, a2 * n + b2) = m(a2 * n + b, a * n + b2);
    return out;
}

CMatrix realign(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    const CMatrix& m = rho.matrix();
    CMatrix out(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t a2 = 0; a2 < n; ++a2)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t b2 = 0; b2 < n; ++b2)
                    out(a * n + a2, b * n + b2) = m(a * n + b, a2 * n + b2);
    return out;
}

SchmidtVector schmidt_decompose(const PureState& psi) {
    const std::size_t n = psi.dim();
    CMatrix coeff(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) coeff(a, b) = psi.amplitude(a * n + b);
    std::vector<double> sv = singular_values(coeff);
    // Renormalize away eigensolver rounding so the type invariant holds exactly.
    double sum2 = 0.0;
    for (double s : sv) sum2 += s * s;
    const double scale = 1.0 / std::sqrt(sum2);
    for (double& s : sv) s *= scale;
    return SchmidtVector(std::move(sv));
}

PureState pure_from_schmidt(const SchmidtVector& alpha) {
    const std::size_t n = alpha.dim();
    std::vector<Complex> amps(n * n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) amps[i * n + i] = alpha.alpha(i);
    return PureState(n, std::move(amps));
}

} // namespace qconc
