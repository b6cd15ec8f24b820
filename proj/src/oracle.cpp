#include "qconc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <utility>

#include "qconc/bounds.hpp"
#include "qconc/rng.hpp"
#include "qconc/states.hpp"

namespace qconc {

namespace {

double sum_pairwise_products(std::span<const double> v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) sum += v[i] * v[j];
    return sum;
}

std::string format_alphas(const SchmidtVector& alpha) {
    std::ostringstream os;
    os << "alpha = [";
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        if (i) os << ", ";
        os << alpha.alpha(i);
    }
    os << "]";
    return os.str();
}

} // namespace

double pure_concurrence(const SchmidtVector& alpha) {
    double sum = 0.0;
    for (std::size_t i = 0; i < alpha.dim(); ++i)
        for (std::size_t j = i + 1; j < alpha.dim(); ++j) {
            const double p = alpha.alpha(i) * alpha.alpha(j);
            sum += p * p;
        }
    return 2.0 * std::sqrt(sum);
}

CMatrix b_matrix(const SchmidtVector& alpha) {
    const std::size_t n = alpha.dim();
    CMatrix b(n, n);
    const double diag_factor = static_cast<double>(n) - 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        b(i, i) = diag_factor * alpha.alpha(i) * alpha.alpha(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            b(i, j) = -alpha.alpha(i) * alpha.alpha(j);
            b(j, i) = b(i, j);
        }
    }
    return b;
}

std::vector<double> elementary_symmetric(std::span<const double> values) {
    std::vector<double> e(values.size() + 1, 0.0);
    e[0] = 1.0;
    std::size_t used = 0;
    for (double v : values) {
        ++used;
        for (std::size_t k = used; k >= 1; --k) e[k] += v * e[k - 1];
    }
    return e;
}

CheckResult t_structure_check(const SchmidtVector& alpha, double tol) {
    const std::size_t n = alpha.dim();
    const CMatrix t = apply_id_phi(density_from_pure(pure_from_schmidt(alpha)));
    std::vector<double> got = singular_values(t);

    std::vector<double> expected(n * n - 2 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        expected.push_back(alpha.alpha(i) * alpha.alpha(i));
    const std::vector<double> bsv = singular_values(b_matrix(alpha));
    expected.insert(expected.end(), bsv.begin(), bsv.end());

    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - expected[i]));
    if (worst > tol) {
        std::ostringstream os;
        os << "t_structure: singular-value multiset deviates by " << worst << " > " << tol
           << "; " << format_alphas(alpha);
        return {false, os.str()};
    }
    return {};
}

CheckResult charpoly_check(const SchmidtVector& alpha, double tol) {
    const std::size_t n = alpha.dim();
    const std::vector<double>& xs = hermitian_eigs(b_matrix(alpha)).eigenvalues;
    std::vector<double> abs_xs(xs.size());
    std::transform(xs.begin(), xs.end(), abs_xs.begin(), [](double x) { return std::abs(x); });
    std::vector<double> alpha2(n);
    for (std::size_t i = 0; i < n; ++i) alpha2[i] = alpha.alpha(i) * alpha.alpha(i);

    const std::vector<double> e_roots = elementary_symmetric(xs);
    const std::vector<double> e_mass = elementary_symmetric(abs_xs);
    const std::vector<double> e_alpha2 = elementary_symmetric(alpha2);

    const double nd = static_cast<double>(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const double pred =
            (nd - 1.0 - static_cast<double>(k)) * std::pow(nd - 1.0, static_cast<double>(k) - 1.0) *
            e_alpha2[k];
        const double got = e_roots[k];
        const double denom = std::max({1e-9, e_mass[k], std::abs(pred)});
        if (std::abs(got - pred) > tol * denom) {
            std::ostringstream os;
            os << "charpoly: e_" << k << "(roots) = " << got << ", formula gives " << pred
               << " (scale " << denom << "); " << format_alphas(alpha);
            return {false, os.str()};
        }
    }
    return {};
}

RootReport root_relations_check(const SchmidtVector& alpha) {
    const std::size_t n = alpha.dim();
    const double nd = static_cast<double>(n);
    RootReport report{alpha, hermitian_eigs(b_matrix(alpha)).eigenvalues, 0.0, 1.0, 0.0, true, ""};

    double prod = 1.0;
    double sum = 0.0;
    for (double x : report.b_eigenvalues) {
        sum += x;
        prod *= x;
    }
    report.sum_roots = sum;
    report.prod_roots = prod;
    report.min_root = report.b_eigenvalues.front();

    std::ostringstream os;
    if (std::abs(sum - (nd - 2.0)) > 1e-9)
        os << "sum of roots " << sum << " != N-2; ";

    double prod_alpha2 = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod_alpha2 *= alpha.alpha(i) * alpha.alpha(i);
    const double expected_prod = -std::pow(nd - 1.0, nd - 1.0) * prod_alpha2;
    std::vector<double> abs_xs(report.b_eigenvalues.size());
    std::transform(report.b_eigenvalues.begin(), report.b_eigenvalues.end(), abs_xs.begin(),
                   [](double x) { return std::abs(x); });
    // Absolute floor covers eigensolver noise amplified through the product.
    const double prod_tol =
        1e-7 * std::abs(expected_prod) + 1e-12 * elementary_symmetric(abs_xs)[n - 1];
    if (std::abs(prod - expected_prod) > prod_tol)
        os << "product of roots " << prod << " != " << expected_prod << "; ";

    std::size_t negatives = 0;
    for (double x : report.b_eigenvalues)
        if (x < -1e-9) ++negatives;
    if (negatives > 1) os << negatives << " negative roots; ";

    const double min_bound = -sum_pairwise_products(alpha.alphas());
    if (report.min_root < min_bound - 1e-9)
        os << "min root " << report.min_root << " < " << min_bound << "; ";

    const std::string violation = os.str();
    if (!violation.empty()) {
        report.ok = false;
        report.violation = violation + format_alphas(alpha);
    }
    return report;
}

CheckResult functional_property_check(const SchmidtVector& alpha) {
    const std::size_t n = alpha.dim();
    const double nd = static_cast<double>(n);
    const CMatrix t = apply_id_phi(density_from_pure(pure_from_schmidt(alpha)));
    const double lhs_trace = trace_norm(t) - (nd - 1.0);

    double lhs_spectrum = 0.0;
    for (double x : hermitian_eigs(b_matrix(alpha)).eigenvalues) lhs_spectrum += std::abs(x);
    lhs_spectrum -= nd - 2.0;

    const double rhs = 2.0 * sum_pairwise_products(alpha.alphas());

    std::ostringstream os;
    if (lhs_trace > rhs + 1e-9)
        os << "trace-norm route " << lhs_trace << " exceeds 2 sum alpha_i alpha_j = " << rhs
           << "; ";
    if (lhs_spectrum > rhs + 1e-9)
        os << "B-spectrum route " << lhs_spectrum << " exceeds " << rhs << "; ";
    if (std::abs(lhs_trace - lhs_spectrum) > 1e-9)
        os << "routes disagree: " << lhs_trace << " vs " << lhs_spectrum << "; ";

    const std::string details = os.str();
    if (!details.empty()) return {false, details + format_alphas(alpha)};
    return {};
}

CheckResult chen_inequality_check(const SchmidtVector& alpha) {
    const std::size_t n = alpha.dim();
    const double nd = static_cast<double>(n);
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = alpha.alpha(i) * alpha.alpha(j);
            lhs += p * p;
        }
    const double pair_sum = sum_pairwise_products(alpha.alphas());
    const double rhs = 2.0 / (nd * (nd - 1.0)) * pair_sum * pair_sum;
    if (lhs < rhs - 1e-12) {
        std::ostringstream os;
        os << "chen: " << lhs << " < " << rhs << "; " << format_alphas(alpha);
        return {false, os.str()};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Convex-roof upper estimate
// ---------------------------------------------------------------------------

namespace {

double concurrence_of_column(std::span<const Complex> amps, std::size_t n) {
    // Normalize away rounding before handing to the validated type.
    double norm2 = 0.0;
    for (const Complex& z : amps) norm2 += std::norm(z);
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> unit(amps.begin(), amps.end());
    for (Complex& z : unit) z *= scale;
    return pure_concurrence(schmidt_decompose(PureState(n, std::move(unit))));
}

} // namespace

double convex_roof_upper(const DensityMatrix& rho, std::size_t n_samples, std::uint64_t seed) {
    if (n_samples < 1) throw InvalidParams("convex_roof_upper: n_samples must be >= 1");
    const std::size_t n = rho.dim();
    const std::size_t d2 = n * n;

    const Spectrum spec = hermitian_eigs(rho.matrix(), true);
    const CMatrix& vecs = *spec.eigenvectors;
    std::vector<double> lambda;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < d2; ++i) {
        if (spec.eigenvalues[i] > 1e-12) {
            lambda.push_back(spec.eigenvalues[i]);
            cols.push_back(i);
        }
    }
    const std::size_t rank = lambda.size();
    if (rank == 0) throw NumericalFailure("convex_roof_upper: state has no positive eigenvalues");

    // The eigendecomposition is itself a valid decomposition; start there.
    double best = 0.0;
    std::vector<Complex> column(d2);
    for (std::size_t k = 0; k < rank; ++k) {
        for (std::size_t i = 0; i < d2; ++i) column[i] = vecs(i, cols[k]);
        best += lambda[k] * concurrence_of_column(column, n);
    }

    std::vector<double> sqrt_lambda(rank);
    for (std::size_t k = 0; k < rank; ++k) sqrt_lambda[k] = std::sqrt(lambda[k]);

    Rng rng(seed);
    for (std::size_t s = 0; s < n_samples; ++s) {
        const std::size_t m = std::min(rank + s % 3, d2);
        const CMatrix iso = random_isometry(m, rank, rng);

        double value = 0.0;
        double total_p = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            // phi_i = sum_k U_ik sqrt(lambda_k) v_k
            std::fill(column.begin(), column.end(), Complex(0.0, 0.0));
            for (std::size_t k = 0; k < rank; ++k) {
                const Complex w = iso(i, k) * sqrt_lambda[k];
                if (w == Complex(0.0, 0.0)) continue;
                for (std::size_t r = 0; r < d2; ++r) column[r] += w * vecs(r, cols[k]);
            }
            double p = 0.0;
            for (const Complex& z : column) p += std::norm(z);
            total_p += p;
            if (p <= 1e-14) continue;
            value += p * concurrence_of_column(column, n);
        }
        if (std::abs(total_p - 1.0) > 1e-6)
            throw NumericalFailure("convex_roof_upper: decomposition weights sum to " +
                                   std::to_string(total_p));
        best = std::min(best, value);
    }
    return best;
}

} // namespace qconc
