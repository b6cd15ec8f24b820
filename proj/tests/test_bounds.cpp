#include "doctest.h"

#include <cmath>

#include "qconc/bounds.hpp"
#include "qconc/oracle.hpp"
#include "qconc/states.hpp"

#include "support.hpp"

using namespace qconc;

namespace {

SchmidtVector maximally_entangled(std::size_t n) {
    return SchmidtVector(std::vector<double>(n, 1.0 / std::sqrt(static_cast<double>(n))));
}

DensityMatrix max_entangled_state(std::size_t n) {
    return density_from_pure(pure_from_schmidt(maximally_entangled(n)));
}

} // namespace

TEST_CASE("phi_map closed forms") {
    for (std::size_t n = 2; n <= 8; ++n) {
        const double expect = static_cast<double>(n) - 1.0;
        CHECK(max_abs_diff(phi_map(CMatrix::identity(n), n), expect * CMatrix::identity(n)) ==
              0.0);
    }

    const std::vector<double> d = {1.0, 2.0, 3.0, 4.0};
    const std::vector<double> expect = {4.0, 7.0, 10.0, 9.0};
    CHECK(max_abs_diff(phi_map(CMatrix::diagonal(d), 4), CMatrix::diagonal(expect)) == 0.0);

    CHECK_THROWS_AS(phi_map(CMatrix::identity(3), 4), ShapeMismatch);
}

TEST_CASE("phi_map matches the displayed 4x4 action entrywise") {
    Rng rng(31);
    const CMatrix m = testhelp::random_matrix(4, 4, rng);
    const CMatrix out = phi_map(m, 4);
    CHECK(out(0, 0) == 2.0 * m(0, 0) + m(1, 1));
    CHECK(out(1, 1) == 2.0 * m(1, 1) + m(2, 2));
    CHECK(out(2, 2) == 2.0 * m(2, 2) + m(3, 3));
    CHECK(out(3, 3) == 2.0 * m(3, 3) + m(0, 0));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (i != j) CHECK(out(i, j) == -m(i, j));
}

TEST_CASE("apply_id_phi on product and family states") {
    for (std::size_t n : {2u, 3u, 4u}) {
        std::vector<Complex> amps(n * n, Complex(0.0));
        amps[0] = 1.0;  // |00>
        const DensityMatrix rho = density_from_pure(PureState(n, std::move(amps)));
        const CMatrix t = apply_id_phi(rho);
        CHECK(t.hermiticity_error() == 0.0);

        // |0><0| ox diag(N-2, 0, ..., 0, 1)
        CMatrix proj(n, n);
        proj(0, 0) = 1.0;
        std::vector<double> d(n, 0.0);
        d[0] = static_cast<double>(n) - 2.0;
        d[n - 1] = 1.0;
        CHECK(max_abs_diff(t, kron(proj, CMatrix::diagonal(d))) == 0.0);
        CHECK(trace_norm(t) == doctest::Approx(static_cast<double>(n) - 1.0).epsilon(1e-12));
    }

    const HouParams q(0.4, 0.3, 0.2, 0.1);
    const CMatrix t = apply_id_phi(hou_state(q));
    CHECK(testhelp::multiset_diff(hermitian_eigs(t).eigenvalues, hou_eigenvalues(q)) <= 1e-12);
}

TEST_CASE("bound_from_functional") {
    CHECK(bound_from_functional(0.0, 2) == 0.0);
    CHECK(bound_from_functional(0.0, 7) == 0.0);
    CHECK(bound_from_functional(1.0, 2) == doctest::Approx(1.0).epsilon(1e-15));
    for (std::size_t n = 2; n <= 6; ++n) {
        const double nd = static_cast<double>(n);
        CHECK(bound_from_functional(nd - 1.0, n) ==
              doctest::Approx(std::sqrt(2.0 * (nd - 1.0) / nd)).epsilon(1e-15));
    }
    CHECK(bound_from_functional(-0.3, 2) < 0.0);  // sign preserved
    CHECK_THROWS_AS(bound_from_functional(1.0, 1), BadDimension);
}

TEST_CASE("phi_bound closed cases") {
    CHECK(phi_bound(max_entangled_state(2)) == doctest::Approx(1.0).epsilon(1e-10));

    // product pure state: trace norm exactly N-1
    std::vector<Complex> amps(9, Complex(0.0));
    amps[0] = 1.0;
    CHECK(std::abs(phi_bound(density_from_pure(PureState(3, std::move(amps))))) <= 1e-9);

    for (std::size_t n = 2; n <= 6; ++n) {
        const double nd = static_cast<double>(n);
        const double expect = (2.0 / nd) * std::sqrt(2.0 / (nd * (nd - 1.0)));
        CHECK(phi_bound(max_entangled_state(n)) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("ppt_bound and realign_bound closed cases") {
    CHECK(ppt_bound(max_entangled_state(2)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(realign_bound(max_entangled_state(2)) == doctest::Approx(1.0).epsilon(1e-10));

    Rng rng(37);
    CMatrix g1 = testhelp::random_matrix(3, 2, rng);
    CMatrix g2 = testhelp::random_matrix(3, 2, rng);
    CMatrix s1 = g1 * dagger(g1);
    CMatrix s2 = g2 * dagger(g2);
    s1 = (1.0 / s1.trace().real()) * s1;
    s2 = (1.0 / s2.trace().real()) * s2;
    const DensityMatrix product(3, kron(s1, s2), 1e-8);
    CHECK(std::abs(ppt_bound(product)) <= 1e-9);

    const DensityMatrix mixed(3, (1.0 / 9.0) * CMatrix::identity(9));
    CHECK(realign_bound(mixed) < 0.0);
}

TEST_CASE("local-unitary invariance of the bounds") {
    Rng rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const DensityMatrix rho = random_density(n, 1 + trial % (n * n), rng);
        const CMatrix u = random_unitary(n, rng);

        // phi acts on the second factor, so U ox I must leave its bound alone
        const CMatrix rot = kron(u, CMatrix::identity(n));
        const DensityMatrix rho_u(n, rot * rho.matrix() * dagger(rot), 1e-8);
        CHECK(std::abs(phi_bound(rho_u) - phi_bound(rho)) <= 1e-9);

        // ppt and realign are invariant under the full U ox V group
        const CMatrix v = random_unitary(n, rng);
        const CMatrix rot2 = kron(u, v);
        const DensityMatrix rho_uv(n, rot2 * rho.matrix() * dagger(rot2), 1e-8);
        CHECK(std::abs(ppt_bound(rho_uv) - ppt_bound(rho)) <= 1e-9);
        CHECK(std::abs(realign_bound(rho_uv) - realign_bound(rho)) <= 1e-9);
    }
}

TEST_CASE("functional convexity probe") {
    Rng rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const double nd = static_cast<double>(n);
        const DensityMatrix r1 = random_density(n, 1 + trial % (n * n), rng);
        const DensityMatrix r2 = random_density(n, n * n, rng);
        const double lam = rng.uniform();
        const DensityMatrix mix(n, lam * r1.matrix() + (1.0 - lam) * r2.matrix(), 1e-8);

        const auto f_phi = [&](const DensityMatrix& r) {
            return trace_norm(apply_id_phi(r)) - (nd - 1.0);
        };
        const auto f_ppt = [&](const DensityMatrix& r) {
            return trace_norm(partial_transpose_first(r)) - 1.0;
        };
        const auto f_re = [&](const DensityMatrix& r) { return trace_norm(realign(r)) - 1.0; };

        CHECK(f_phi(mix) <= lam * f_phi(r1) + (1.0 - lam) * f_phi(r2) + 1e-9);
        CHECK(f_ppt(mix) <= lam * f_ppt(r1) + (1.0 - lam) * f_ppt(r2) + 1e-9);
        CHECK(f_re(mix) <= lam * f_re(r1) + (1.0 - lam) * f_re(r2) + 1e-9);
    }
}

TEST_CASE("pure-state domination and lower-bound validity") {
    Rng rng(47);
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const double nd = static_cast<double>(n);
        const SchmidtVector alpha = random_schmidt(n, rng);
        const DensityMatrix rho = density_from_pure(pure_from_schmidt(alpha));

        double pair_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) pair_sum += alpha.alpha(i) * alpha.alpha(j);

        CHECK(trace_norm(apply_id_phi(rho)) - (nd - 1.0) <= 2.0 * pair_sum + 1e-9);
        CHECK(phi_bound(rho) <= pure_concurrence(alpha) + 1e-9);
    }
}

TEST_CASE("positivity of the map, and its failure under I ox Phi") {
    Rng rng(53);
    for (int trial = 0; trial < 70; ++trial) {
        const std::size_t n = 2 + trial % 7;
        CMatrix g = testhelp::random_matrix(n, n, rng);
        CMatrix sigma = g * dagger(g);
        sigma = (1.0 / sigma.trace().real()) * sigma;
        CHECK(hermitian_eigs(phi_map(sigma, n)).eigenvalues.front() >= -1e-10);
    }

    for (std::size_t n = 2; n <= 8; ++n) {
        const CMatrix t = apply_id_phi(max_entangled_state(n));
        const double min_eig = hermitian_eigs(t).eigenvalues.front();
        CHECK(min_eig == doctest::Approx(-1.0 / static_cast<double>(n)).epsilon(1e-10));
    }
}

TEST_CASE("evaluate_bounds report") {
    const BoundReport report = evaluate_bounds(max_entangled_state(2));
    CHECK(report.n == 2);
    CHECK(report.phi_trace_norm == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.ppt_trace_norm == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.realign_trace_norm == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(report.detected_by == std::vector<std::string>{"phi", "ppt", "realign"});
    CHECK_FALSE(report.witness_bound.has_value());

    // bounds are recomputable from the stored trace norms
    CHECK(report.phi_bound ==
          doctest::Approx(bound_from_functional(report.phi_trace_norm - 1.0, 2)).epsilon(1e-15));
    CHECK(report.ppt_bound ==
          doctest::Approx(bound_from_functional(report.ppt_trace_norm - 1.0, 2)).epsilon(1e-15));
    CHECK(report.realign_bound ==
          doctest::Approx(bound_from_functional(report.realign_trace_norm - 1.0, 2))
              .epsilon(1e-15));

    const DensityMatrix mixed(2, (1.0 / 4.0) * CMatrix::identity(4));
    CHECK(evaluate_bounds(mixed).detected_by.empty());
}
