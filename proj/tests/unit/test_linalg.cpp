#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qcorr/error.hpp"
#include "qcorr/linalg.hpp"
#include "qcorr/oracle.hpp"
#include "qcorr/states.hpp"
#include "support.hpp"

using namespace qcorr;
using qcorr::test::max_abs_diff;
using qcorr::test::real_matrix;

TEST_CASE("eig_hermitian on trivial spectra") {
    const auto id = eig_hermitian(ComplexMatrix::identity(3));
    CHECK(id.eigenvalues == std::vector<double>{1.0, 1.0, 1.0});

    const std::vector<double> neg{-1.0, -1.0, -1.0};
    const auto d = eig_hermitian(ComplexMatrix::diagonal(neg));
    CHECK(d.eigenvalues == neg);
}

TEST_CASE("eig_hermitian matches characteristic polynomial roots on random 4x4") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix h = random_hermitian(4, rng);
        const auto spectrum = eig_hermitian(h, false);
        const auto roots = qcorr::test::charpoly_roots(h);
        REQUIRE(roots.size() == 4);
        for (std::size_t k = 0; k < 4; ++k) CHECK(spectrum.eigenvalues[k] == doctest::Approx(roots[k]).epsilon(1e-9));
    }
}

TEST_CASE("eig_hermitian reconstruction, orthonormality and trace identities") {
    Rng rng(5);
    for (std::size_t n : {2u, 3u, 5u, 8u, 16u, 25u}) {
        const ComplexMatrix a = random_hermitian(n, rng);
        const Spectrum s = eig_hermitian(a);
        REQUIRE(s.eigenvectors.has_value());
        const ComplexMatrix& v = *s.eigenvectors;
        CHECK(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));

        const ComplexMatrix rebuilt = v * ComplexMatrix::diagonal(s.eigenvalues) * v.adjoint();
        CHECK(frobenius_distance(rebuilt, a) < 1e-10);
        CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)) < 1e-10);

        const double sum = std::accumulate(s.eigenvalues.begin(), s.eigenvalues.end(), 0.0);
        CHECK(std::abs(sum - a.trace().real()) < 1e-10);
        double sq = 0.0;
        for (double l : s.eigenvalues) sq += l * l;
        CHECK(std::abs(sq - hs_norm_sq(a)) < 1e-9);
    }
}

TEST_CASE("eig_hermitian rejects bad input") {
    ComplexMatrix a(2, 2, {1.0, cplx(0.0, 1.0), cplx(0.0, 1.0), 1.0});
    CHECK_THROWS_AS(eig_hermitian(a), Error);
    try {
        eig_hermitian(a);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonHermitian);
    }
    try {
        eig_hermitian(ComplexMatrix(2, 3));
        FAIL("expected NonSquare");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSquare);
    }
}

TEST_CASE("eig_hermitian symmetrizes inputs within tolerance") {
    ComplexMatrix a(2, 2, {1.0, cplx(0.5, 1e-13), cplx(0.5, 0.0), 2.0});
    const auto s = eig_hermitian(a);
    CHECK(s.eigenvalues.size() == 2);
}

TEST_CASE("hs_norm_sq") {
    CHECK(hs_norm_sq(ComplexMatrix(3, 3)) == 0.0);
    CHECK(hs_norm_sq(ComplexMatrix::identity(5)) == doctest::Approx(5.0));
    const double p = 0.37;
    const std::vector<double> t{-p, -p, -p};
    CHECK(hs_norm_sq(ComplexMatrix::diagonal(t)) == doctest::Approx(3.0 * p * p));
}

TEST_CASE("trace_norm") {
    CHECK(trace_norm(ComplexMatrix(4, 4)) == 0.0);
    CHECK(trace_norm(ComplexMatrix::diagonal(std::vector<double>{0.5, 0.5, 0.5, -0.5})) == doctest::Approx(2.0));
    CHECK(trace_norm(random_density_matrix(2, 3, 4, 9)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partial_transpose") {
    const Dims dims{2, 2};
    const ComplexMatrix r1 = rho1().matrix();
    CHECK(partial_transpose(r1, dims, Subsystem::A) == r1);

    const auto ev = eigvalsh(partial_transpose(singlet().matrix(), dims, Subsystem::A));
    const std::vector<double> expected{-0.5, 0.5, 0.5, 0.5};
    for (std::size_t k = 0; k < 4; ++k) CHECK(ev[k] == doctest::Approx(expected[k]));

    Rng rng(3);
    const ComplexMatrix a = random_density_matrix(2, 1, 2, rng);
    const ComplexMatrix b = random_density_matrix(3, 1, 3, rng);
    const ComplexMatrix prod = kron(a, b);
    CHECK(max_abs_diff(partial_transpose(prod, {2, 3}, Subsystem::A), kron(a.transpose(), b)) < 1e-15);
    CHECK(max_abs_diff(partial_transpose(prod, {2, 3}, Subsystem::B), kron(a, b.transpose())) < 1e-15);

    const ComplexMatrix rho = random_density_matrix(3, 4, 12, rng);
    for (auto sub : {Subsystem::A, Subsystem::B}) {
        const ComplexMatrix once = partial_transpose(rho, {3, 4}, sub);
        CHECK(hermitian_residual(once) < 1e-15);
        CHECK(partial_transpose(once, {3, 4}, sub) == rho);
    }
    CHECK_THROWS_AS(partial_transpose(rho, {2, 2}, Subsystem::A), Error);
}

TEST_CASE("partial_trace") {
    Rng rng(4);
    const ComplexMatrix a = random_density_matrix(2, 1, 2, rng);
    const ComplexMatrix b = random_density_matrix(3, 1, 2, rng);
    CHECK(max_abs_diff(partial_trace(kron(a, b), {2, 3}, Subsystem::B), a) < 1e-14);
    CHECK(max_abs_diff(partial_trace(kron(a, b), {2, 3}, Subsystem::A), b) < 1e-14);

    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(singlet().matrix(), {2, 2}, Subsystem::B), half) < 1e-15);
    CHECK(max_abs_diff(partial_trace(maximally_mixed({2, 2}).matrix(), {2, 2}, Subsystem::A), half) < 1e-15);

    const ComplexMatrix rho = random_density_matrix(3, 3, 5, rng);
    CHECK(std::abs(partial_trace(rho, {3, 3}, Subsystem::A).trace() - rho.trace()) < 1e-12);
    CHECK_THROWS_AS(partial_trace(rho, {2, 3}, Subsystem::A), Error);
}

TEST_CASE("kron") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    const ComplexMatrix xx = kron(pauli(1), pauli(1));
    CHECK(xx(0, 3) == cplx(1.0, 0.0));
    const ComplexMatrix big = kron(ComplexMatrix(2, 2), ComplexMatrix(3, 3));
    CHECK(big.rows() == 6);
    CHECK(big.cols() == 6);

    Rng rng(8);
    const ComplexMatrix a = random_hermitian(2, rng), b = random_hermitian(3, rng);
    const ComplexMatrix c = random_hermitian(2, rng), d = random_hermitian(3, rng);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-13);
}

TEST_CASE("pauli matrices") {
    CHECK(pauli(0) == ComplexMatrix::identity(2));
    CHECK(pauli(2)(0, 1) == cplx(0.0, -1.0));
    CHECK(pauli(3) == real_matrix({{1, 0}, {0, -1}}));
    for (int i = 1; i <= 3; ++i) CHECK(max_abs_diff(pauli(i) * pauli(i), ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("random_density_matrix") {
    const ComplexMatrix pure = random_density_matrix(2, 2, 1, 17);
    const auto ev = eigvalsh(pure);
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(ev[k]) < 1e-12);
    CHECK(ev[3] == doctest::Approx(1.0));

    CHECK(random_density_matrix(2, 2, 4, 42) == random_density_matrix(2, 2, 4, 42));
    CHECK_FALSE(random_density_matrix(2, 2, 4, 42) == random_density_matrix(2, 2, 4, 43));

    Rng rng(1);
    double mean = 0.0;
    const int samples = 2000;
    for (int s = 0; s < samples; ++s) {
        const auto values = eigvalsh(random_density_matrix(2, 2, 4, rng));
        mean += std::accumulate(values.begin(), values.end(), 0.0) / 4.0;
    }
    CHECK(mean / samples == doctest::Approx(0.25).epsilon(1e-12));

    CHECK_THROWS_AS(random_density_matrix(2, 2, 0, 1), Error);
    CHECK_THROWS_AS(random_density_matrix(2, 2, 5, 1), Error);
}

TEST_CASE("random_density_matrix output always validates") {
    for (std::uint64_t seed = 0; seed < 100000; ++seed) {
        const std::size_t rank = 1 + seed % 4;
        CHECK_NOTHROW(DensityMatrix({2, 2}, random_density_matrix(2, 2, rank, seed)));
    }
}

TEST_CASE("random_separable_state is a valid PPT state") {
    Rng rng(6);
    for (int s = 0; s < 500; ++s) {
        const DensityMatrix rho({2, 2}, random_separable_state(1 + s % 5, rng));
        CHECK(eigvalsh(partial_transpose(rho.matrix(), {2, 2}, Subsystem::A)).front() > -1e-12);
    }
}

TEST_CASE("random_unitary is unitary") {
    Rng rng(2);
    const ComplexMatrix u = random_unitary(4, rng);
    CHECK(max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(4)) < 1e-12);
}

TEST_CASE("Weyl inequality on explicit pairs") {
    WeylReport report;
    check_weyl(ComplexMatrix::identity(3), ComplexMatrix::identity(3), 1e-10, report);
    CHECK(report.violations == 0);
    CHECK(report.worst_margin == doctest::Approx(0.0));

    // Interleaved diagonal spectra give strict inequalities on both sides.
    WeylReport strict;
    const ComplexMatrix x = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    const ComplexMatrix y = ComplexMatrix::diagonal(std::vector<double>{0.9, -0.5});
    check_weyl(x, y, 1e-10, strict);
    CHECK(strict.violations == 0);
    CHECK(strict.worst_margin == doctest::Approx(0.4));
}

TEST_CASE("Weyl property driver") {
    const WeylReport r = weyl_property_driver(3, 100000, 99);
    CHECK(r.samples == 100000);
    CHECK(r.violations == 0);
    CHECK_THROWS_AS(weyl_property_driver(9, 1, 1), Error);
    CHECK_THROWS_AS(weyl_property_driver(1, 1, 1), Error);
}
