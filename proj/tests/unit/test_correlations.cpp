#include <doctest.h>

#include <cmath>

#include "qcorr/correlations.hpp"
#include "qcorr/error.hpp"
#include "support.hpp"

using namespace qcorr;
using qcorr::test::charpoly_roots;
using qcorr::test::max_abs_diff;
using qcorr::test::trace_product;

namespace {

// Bloch data straight from Tr(rho sigma_i (x) sigma_j) with explicit Kronecker products.
BlochForm reference_bloch(const DensityMatrix& rho) {
    BlochForm f;
    for (int i = 1; i <= 3; ++i) {
        f.x[i - 1] = trace_product(rho.matrix(), kron(pauli(i), pauli(0))).real();
        f.y[i - 1] = trace_product(rho.matrix(), kron(pauli(0), pauli(i))).real();
        for (int j = 1; j <= 3; ++j) f.t[i - 1][j - 1] = trace_product(rho.matrix(), kron(pauli(i), pauli(j))).real();
    }
    return f;
}

// Closed-form discord with lambda_max from characteristic-polynomial roots.
double reference_discord(const DensityMatrix& rho, double scale) {
    const BlochForm f = reference_bloch(rho);
    ComplexMatrix k(3, 3);
    double x2 = 0.0, t2 = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        x2 += f.x[i] * f.x[i];
        for (std::size_t j = 0; j < 3; ++j) {
            t2 += f.t[i][j] * f.t[i][j];
            double kij = f.x[i] * f.x[j];
            for (std::size_t l = 0; l < 3; ++l) kij += f.t[i][l] * f.t[j][l];
            k(i, j) = kij;
        }
    }
    const auto roots = charpoly_roots(k, 200000);
    return std::max(0.0, scale / 4.0 * (x2 + t2 - roots.back()));
}

DensityMatrix random_state(Rng& rng, std::size_t rank) { return {{2, 2}, random_density_matrix(2, 2, rank, rng)}; }

}  // namespace

TEST_CASE("bloch_decompose examples") {
    for (double p : {0.0, 0.3, 1.0}) {
        const BlochForm f = bloch_decompose(werner2(p));
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(f.x[i] == doctest::Approx(0.0));
            CHECK(f.y[i] == doctest::Approx(0.0));
            for (std::size_t j = 0; j < 3; ++j) CHECK(f.t[i][j] == doctest::Approx(i == j ? -p : 0.0));
        }
    }
    const BlochForm r = bloch_decompose(rho1());
    CHECK(r.x == Vec3{1.0, 0.0, 0.0});
    CHECK(r.y == Vec3{1.0, 0.0, 0.0});
    CHECK(r.t[0][0] == doctest::Approx(1.0));
    CHECK(std::abs(r.t[1][1]) + std::abs(r.t[2][2]) + std::abs(r.t[0][1]) < 1e-15);

    CHECK_THROWS_AS(bloch_decompose(isotropic(3, 0.5)), Error);
}

TEST_CASE("bloch_decompose agrees with explicit traces and reconstructs") {
    Rng rng(31);
    for (int s = 0; s < 200; ++s) {
        const DensityMatrix rho = random_state(rng, 1 + s % 4);
        const BlochForm f = bloch_decompose(rho);
        const BlochForm ref = reference_bloch(rho);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(std::abs(f.x[i] - ref.x[i]) < 1e-14);
            CHECK(std::abs(f.y[i] - ref.y[i]) < 1e-14);
            for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(f.t[i][j] - ref.t[i][j]) < 1e-14);
        }
        CHECK(max_abs_diff(bloch_reconstruct(f), rho.matrix()) < 1e-12);
    }
}

TEST_CASE("geometric_discord examples") {
    for (double p : {0.0, 0.25, 0.5, 0.8, 1.0})
        CHECK(geometric_discord(werner2(p)) == doctest::Approx(2.0 / 3.0 * p * p).epsilon(1e-12));
    for (auto n : {Normalization::Paper, Normalization::HilbertSchmidt, Normalization::Monotone})
        CHECK(geometric_discord(rho1(), n) == 0.0);
    CHECK(geometric_discord(singlet(), Normalization::Monotone) == doctest::Approx(1.0));
    CHECK(geometric_discord(singlet(), Normalization::HilbertSchmidt) == doctest::Approx(0.5));
}

TEST_CASE("geometric_discord matches the characteristic-polynomial reference") {
    Rng rng(32);
    for (int s = 0; s < 100; ++s) {
        const DensityMatrix rho = random_state(rng, 1 + s % 4);
        CHECK(std::abs(geometric_discord(rho) - reference_discord(rho, 4.0 / 3.0)) < 1e-9);
    }
}

TEST_CASE("discord_bounds examples") {
    const DiscordBounds w = discord_bounds(werner2(0.6));
    CHECK(w.min == doctest::Approx(0.24));
    CHECK(w.max == doctest::Approx(0.24));
    const DiscordBounds r = discord_bounds(rho1());
    CHECK(r.min == doctest::Approx(0.0));
    CHECK(r.max == doctest::Approx(1.0 / 3.0));
    const DiscordBounds b = discord_bounds(bell_phi_plus(2));
    CHECK(b.min == doctest::Approx(2.0 / 3.0));
    CHECK(b.max == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("horodecki_m, fidelity and negativity examples") {
    for (double p : {0.1, 0.5, 0.9}) {
        const DensityMatrix w = werner2(p);
        CHECK(horodecki_m(w) == doctest::Approx(2.0 * p * p));
        CHECK(teleportation_fidelity(w) == doctest::Approx((1.0 + p) / 2.0));
        CHECK(negativity2(w) == doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)));
    }
    CHECK(horodecki_m(singlet()) == doctest::Approx(2.0));
    CHECK(teleportation_fidelity(singlet()) == doctest::Approx(1.0));
    CHECK(negativity2(singlet()) == doctest::Approx(1.0));
    const DensityMatrix mixed = maximally_mixed({2, 2});
    CHECK(horodecki_m(mixed) == 0.0);
    CHECK(horodecki_u(mixed) == 0.0);
    CHECK(teleportation_fidelity(mixed) == 0.5);
}

TEST_CASE("classify_regime and audit_theorems on Werner states") {
    const auto r9 = full_report(werner2(0.9));
    CHECK(r9.regime == Regime::BellViolatingUseful);
    const auto a9 = audit_theorems(r9);
    CHECK(a9.eq11_applicable);
    CHECK(a9.eq11_holds);
    CHECK_FALSE(a9.eq9_applicable);
    CHECK_FALSE(a9.eq10_applicable);

    const auto r6 = full_report(werner2(0.6));
    CHECK(r6.m == doctest::Approx(0.72));
    CHECK(r6.fidelity == doctest::Approx(0.8));
    CHECK(r6.regime == Regime::BellSatisfiedUseful);
    const auto a6 = audit_theorems(r6);
    CHECK(a6.eq9_applicable);
    CHECK(a6.eq9_holds);

    const auto r2 = full_report(werner2(0.2));
    CHECK(r2.regime == Regime::NotUseful);
    CHECK(r2.d_g_max == doctest::Approx(0.08 / 3.0));
    const auto a2 = audit_theorems(r2);
    CHECK(a2.eq10_applicable);
    CHECK(a2.eq10_holds);
}

TEST_CASE("regime thresholds are strict") {
    CorrelationReport r;
    r.m = 1.0;
    r.fidelity = 2.0 / 3.0;
    CHECK(classify_regime(r) == Regime::NotUseful);
    r.m = std::nextafter(1.0, 2.0);
    CHECK(classify_regime(r) == Regime::BellViolatingUseful);
    r.m = 0.5;
    r.fidelity = std::nextafter(2.0 / 3.0, 1.0);
    CHECK(classify_regime(r) == Regime::BellSatisfiedUseful);
}

TEST_CASE("audit flags a violated inequality") {
    CorrelationReport r;
    r.m = 0.9;
    r.fidelity = 0.9;
    r.d_g_max = 0.3;  // (3F-2)^2 = 0.49 > 0.3
    const TheoremAudit a = audit_theorems(r);
    CHECK(a.eq9_applicable);
    CHECK_FALSE(a.eq9_holds);
    CHECK_FALSE(a.all_hold());
}

TEST_CASE("full_report boundary and trivial states") {
    const auto crit = full_report(werner2(1.0 / std::sqrt(2.0)));
    CHECK(crit.m == doctest::Approx(1.0));
    CHECK(crit.d_g_max == doctest::Approx(1.0 / 3.0));

    const auto mixed = full_report(maximally_mixed({2, 2}));
    CHECK(mixed.d_g == 0.0);
    CHECK(mixed.d_g_max == 0.0);
    CHECK(mixed.m == 0.0);
    CHECK(mixed.negativity == 0.0);
    CHECK(mixed.fidelity == 0.5);
    CHECK(mixed.regime == Regime::NotUseful);

    const auto r1 = full_report(rho1());
    CHECK(r1.d_g == 0.0);
    CHECK(r1.d_g_max == doctest::Approx(1.0 / 3.0));
    CHECK(r1.negativity == doctest::Approx(0.0));
    CHECK(r1.fidelity == doctest::Approx(2.0 / 3.0));
    CHECK(r1.regime == Regime::NotUseful);
}

TEST_CASE("report invariants and inequality suite on random states") {
    Rng rng(33);
    std::size_t entangled = 0;
    for (int s = 0; s < 10000; ++s) {
        const DensityMatrix rho = random_state(rng, 1 + s % 4);
        const CorrelationReport r = full_report(rho);
        CHECK(r.d_g_min <= r.d_g + 1e-12);
        CHECK(r.d_g <= r.d_g_max + 1e-12);
        CHECK(std::abs(r.d_g_max - r.m / 3.0) < 1e-12);
        CHECK(r.fidelity >= 0.5);
        CHECK(r.fidelity <= 1.0 + 1e-12);
        CHECK(r.m <= 2.0 + 1e-12);
        CHECK(r.negativity <= 1.0 + 1e-12);
        CHECK(r.m <= r.u + 1e-10);
        CHECK(r.d_g_max <= 2.0 * r.fidelity - 1.0 + 1e-12);
        CHECK(3.0 * r.fidelity - 2.0 <= r.negativity + 1e-10);
        if (r.negativity > 1e-8) {
            ++entangled;
            CHECK(r.negativity * r.negativity <= geometric_discord(rho, Normalization::Monotone) + 1e-10);
        }
        CHECK(audit_theorems(r).all_hold());
    }
    CHECK(entangled > 1000);
}

TEST_CASE("default 4/3 normalization breaks N^2 <= D_G at the Bell state") {
    const double n = negativity2(singlet());
    CHECK(n * n > geometric_discord(singlet(), Normalization::Paper));
}

TEST_CASE("separable samples stay inside the Bell and discord bounds") {
    Rng rng(34);
    for (int s = 0; s < 10000; ++s) {
        const DensityMatrix rho({2, 2}, random_separable_state(1 + s % 6, rng));
        const CorrelationReport r = full_report(rho);
        CHECK(r.m <= 1.0 + 1e-10);
        CHECK(r.d_g_max <= 1.0 / 3.0 + 1e-10);
        CHECK(r.negativity <= 1e-10);
    }
}

TEST_CASE("local-unitary invariance") {
    Rng rng(35);
    for (int s = 0; s < 200; ++s) {
        const DensityMatrix rho = random_state(rng, 1 + s % 4);
        const ComplexMatrix u = kron(random_unitary(2, rng), random_unitary(2, rng));
        const DensityMatrix rotated({2, 2}, u * rho.matrix() * u.adjoint());
        const CorrelationReport a = full_report(rho), b = full_report(rotated);
        CHECK(std::abs(a.d_g - b.d_g) < 1e-10);
        CHECK(std::abs(a.d_g_min - b.d_g_min) < 1e-10);
        CHECK(std::abs(a.d_g_max - b.d_g_max) < 1e-10);
        CHECK(std::abs(a.m - b.m) < 1e-10);
        CHECK(std::abs(a.u - b.u) < 1e-10);
        CHECK(std::abs(a.fidelity - b.fidelity) < 1e-10);
        CHECK(std::abs(a.negativity - b.negativity) < 1e-10);
    }
}

TEST_CASE("normalization names") {
    CHECK(parse_normalization("hs") == Normalization::HilbertSchmidt);
    CHECK(std::string(to_string(Normalization::Monotone)) == "monotone");
    CHECK_THROWS_AS(parse_normalization("bogus"), Error);
}
