#include "doctest.h"

#include <cmath>
#include <numeric>

#include "qconc/bounds.hpp"
#include "qconc/linalg.hpp"
#include "qconc/states.hpp"

#include "support.hpp"

using namespace qconc;

namespace {

CMatrix exchange2() {
    CMatrix x(2, 2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    return x;
}

} // namespace

TEST_CASE("kron basics") {
    const CMatrix i2 = CMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), CMatrix::identity(4)) == 0.0);

    const std::vector<double> d12 = {1.0, 2.0};
    const std::vector<double> expect = {1.0, 1.0, 2.0, 2.0};
    CHECK(max_abs_diff(kron(CMatrix::diagonal(d12), i2), CMatrix::diagonal(expect)) == 0.0);

    // column 0 of X ox X is e3
    const CMatrix xx = kron(exchange2(), exchange2());
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(xx(i, 0) == (i == 3 ? Complex(1.0) : Complex(0.0)));
}

TEST_CASE("dagger") {
    CHECK(max_abs_diff(dagger(CMatrix::identity(3)), CMatrix::identity(3)) == 0.0);

    CMatrix a(2, 2);
    a(0, 1) = Complex(0.0, 1.0);
    const CMatrix ad = dagger(a);
    CHECK(ad(1, 0) == Complex(0.0, -1.0));
    CHECK(ad(0, 1) == Complex(0.0, 0.0));

    Rng rng(42);
    const CMatrix r = testhelp::random_matrix(3, 5, rng);
    CHECK(max_abs_diff(dagger(dagger(r)), r) == 0.0);
}

TEST_CASE("hermitian_eigs on closed-form inputs") {
    const std::vector<double> d = {3.0, 1.0, 2.0};
    const Spectrum s = hermitian_eigs(CMatrix::diagonal(d));
    CHECK(s.eigenvalues == std::vector<double>{1.0, 2.0, 3.0});

    const Spectrum sx = hermitian_eigs(exchange2());
    CHECK(sx.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(sx.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));

    // B matrix of the balanced two-coefficient vector: [[0, -1/2], [-1/2, 0]]
    CMatrix b(2, 2);
    b(0, 1) = -0.5;
    b(1, 0) = -0.5;
    const Spectrum sb = hermitian_eigs(b);
    CHECK(sb.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(sb.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("hermitian_eigs rejects bad inputs") {
    CMatrix rect(2, 3);
    CHECK_THROWS_AS(hermitian_eigs(rect), ShapeMismatch);

    CMatrix skew(2, 2);
    skew(0, 1) = 1.0;
    skew(1, 0) = -1.0;
    CHECK_THROWS_AS(hermitian_eigs(skew), NonHermitian);
}

TEST_CASE("hermitian_eigs reconstruction and unitarity up to dimension 36") {
    Rng rng(7);
    for (std::size_t n : {2u, 3u, 5u, 9u, 16u, 25u, 36u}) {
        const CMatrix a = testhelp::random_hermitian(n, rng);
        const Spectrum s = hermitian_eigs(a, true);
        REQUIRE(s.eigenvectors.has_value());
        const CMatrix& q = *s.eigenvectors;

        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));

        const double tr = a.trace().real();
        const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
        CHECK(std::abs(sum - tr) <= 1e-9 * static_cast<double>(n));

        CHECK(max_abs_diff(dagger(q) * q, CMatrix::identity(n)) <= 1e-10);

        const CMatrix lambda = CMatrix::diagonal(s.eigenvalues);
        CHECK(max_abs_diff(q * lambda * dagger(q), a) <= 1e-10);
    }
}

TEST_CASE("singular_values closed forms") {
    const std::vector<double> ones4(4, 1.0);
    CHECK(testhelp::multiset_diff(singular_values(CMatrix::identity(4)), ones4) <= 1e-12);

    const std::vector<double> d = {-2.0, 1.0};
    const std::vector<double> sv = singular_values(CMatrix::diagonal(d));
    CHECK(sv[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-13));

    // rank-one outer product of unit vectors
    Rng rng(3);
    CMatrix u = testhelp::random_matrix(4, 1, rng);
    CMatrix v = testhelp::random_matrix(4, 1, rng);
    double nu = 0.0, nv = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        nu += std::norm(u(i, 0));
        nv += std::norm(v(i, 0));
    }
    u = (1.0 / std::sqrt(nu)) * u;
    v = (1.0 / std::sqrt(nv)) * v;
    // trailing values inherit the sqrt(eps) floor of the Gram-matrix route
    const std::vector<double> rank_one = singular_values(u * dagger(v));
    CHECK(rank_one[0] == doctest::Approx(1.0).epsilon(1e-11));
    for (std::size_t i = 1; i < rank_one.size(); ++i) CHECK(rank_one[i] <= 1e-7);
}

TEST_CASE("trace_norm closed forms and the example-family value") {
    CHECK(trace_norm(CMatrix::identity(4)) == doctest::Approx(4.0).epsilon(1e-13));
    const std::vector<double> d = {1.0, -1.0};
    CHECK(trace_norm(CMatrix::diagonal(d)) == doctest::Approx(2.0).epsilon(1e-13));

    // sum of |eigenvalues| of the published list: 3 + (q1 - q4)/2
    const DensityMatrix rho = hou_state(HouParams(0.4, 0.3, 0.2, 0.1));
    CHECK(trace_norm(apply_id_phi(rho)) == doctest::Approx(3.15).epsilon(1e-11));
}

TEST_CASE("trace_norm properties") {
    Rng rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const CMatrix a = testhelp::random_matrix(n, n, rng);

        // unitary invariance
        const CMatrix u = random_unitary(n, rng);
        const CMatrix v = random_unitary(n, rng);
        CHECK(std::abs(trace_norm(u * a * v) - trace_norm(a)) <= 1e-9);

        // trace_norm(A) >= |trace(A)|
        CHECK(trace_norm(a) >= std::abs(a.trace()) - 1e-12);

        // Hermitian route agrees with singular values
        const CMatrix h = testhelp::random_hermitian(n, rng);
        std::vector<double> abs_eigs;
        for (double ev : hermitian_eigs(h).eigenvalues) abs_eigs.push_back(std::abs(ev));
        CHECK(testhelp::multiset_diff(singular_values(h), abs_eigs) <= 1e-10);
    }
}

TEST_CASE("CMatrix validation") {
    CHECK_THROWS_AS(CMatrix(0, 2), InvalidParams);
    CHECK_THROWS_AS(CMatrix(2, 2, std::vector<Complex>(3)), InvalidParams);
    std::vector<Complex> bad(4, Complex(0.0));
    bad[2] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(CMatrix(2, 2, std::move(bad)), InvalidParams);
}
