#include <doctest.h>

#include <cmath>

#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "support.hpp"

using namespace qcorr;
using qcorr::test::max_abs_diff;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected qcorr::Error");
    return ErrorKind::ParseError;
}

Trajectory constant_trajectory(const DensityMatrix& rho, std::size_t points) {
    Trajectory t;
    for (std::size_t i = 0; i < points; ++i) {
        t.times.push_back(static_cast<double>(i));
        t.reports.push_back(full_report(rho));
    }
    return t;
}

}  // namespace

TEST_CASE("evolve under WernerDecay") {
    const Channel c = Channel::werner_decay(0.95, 5.0);
    CHECK(evolve(c, 0.0).matrix() == werner2(0.95).matrix());
    CHECK(max_abs_diff(evolve(c, 0.1).matrix(), werner2(0.95 * std::exp(-0.5)).matrix()) < 1e-15);
    CHECK(max_abs_diff(evolve(c, 8.0).matrix(), 0.25 * ComplexMatrix::identity(4)) < 1e-10);
    CHECK(kind_of([&] { evolve(c, -1.0); }) == ErrorKind::NegativeTime);
    CHECK(kind_of([] { Channel::werner_decay(1.5, 1.0); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { Channel::werner_decay(0.5, 0.0); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("evolve under LocalDepolarizing") {
    const double gamma = 2.0;
    const Channel c = Channel::local_depolarizing(singlet(), gamma);
    CHECK(evolve(c, 0.0).matrix() == singlet().matrix());
    const double t_half = std::log(2.0) / gamma;  // q = 1/2
    CHECK(max_abs_diff(evolve(c, t_half).matrix(), werner2(0.25).matrix()) < 1e-14);

    // explicit per-qubit map on a generic state
    const DensityMatrix rho({2, 2}, random_density_matrix(2, 2, 3, 61));
    const double t = 0.3, q = 1.0 - std::exp(-gamma * t);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexMatrix ra = partial_trace(rho.matrix(), {2, 2}, Subsystem::B);
    const ComplexMatrix rb = partial_trace(rho.matrix(), {2, 2}, Subsystem::A);
    const ComplexMatrix expected = (1.0 - q) * (1.0 - q) * rho.matrix() + (q * (1.0 - q) * 0.5) * kron(id, rb) +
                                   (q * (1.0 - q) * 0.5) * kron(ra, id) + (q * q * 0.25) * ComplexMatrix::identity(4);
    CHECK(max_abs_diff(evolve(Channel::local_depolarizing(rho, gamma), t).matrix(), expected) < 1e-14);

    CHECK(kind_of([] { Channel::local_depolarizing(isotropic(3, 0.5), 1.0); }) == ErrorKind::WrongDims);
}

TEST_CASE("WernerDecay trajectory crossings and regime order") {
    const double p0 = 0.95, gamma = 5.0;
    const Trajectory traj = trajectory(Channel::werner_decay(p0, gamma), 1.0, 1000);
    REQUIRE(traj.times.size() == 1000);
    for (std::size_t i = 1; i < traj.times.size(); ++i) CHECK(traj.times[i] > traj.times[i - 1]);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == 1.0);

    REQUIRE(traj.bell_crossing_time.has_value());
    REQUIRE(traj.usefulness_crossing_time.has_value());
    CHECK(std::abs(*traj.bell_crossing_time - std::log(p0 * std::sqrt(2.0)) / gamma) < 1e-6);
    CHECK(std::abs(*traj.usefulness_crossing_time - std::log(3.0 * p0) / gamma) < 1e-6);
    CHECK(std::abs(*traj.bell_crossing_time - 0.0590561) < 1e-6);
    CHECK(std::abs(*traj.usefulness_crossing_time - 0.2094638) < 1e-6);

    const Channel c = Channel::werner_decay(p0, gamma);
    CHECK(std::abs(full_report(evolve(c, *traj.bell_crossing_time)).m - 1.0) <= 1e-6);
    CHECK(std::abs(full_report(evolve(c, *traj.usefulness_crossing_time)).fidelity - 2.0 / 3.0) <= 1e-6);

    CHECK(traj.reports.front().regime == Regime::BellViolatingUseful);
    CHECK(traj.reports.back().regime == Regime::NotUseful);
    bool seen_middle = false;
    for (std::size_t i = 1; i < traj.reports.size(); ++i) {
        CHECK(static_cast<int>(traj.reports[i].regime) <= static_cast<int>(traj.reports[i - 1].regime));
        seen_middle = seen_middle || traj.reports[i].regime == Regime::BellSatisfiedUseful;
    }
    CHECK(seen_middle);

    const TrajectoryAudit audit = audit_trajectory(traj);
    CHECK(audit.violations == 0);
    CHECK_FALSE(audit.first_violation.has_value());
    CHECK(audit.points.size() == traj.times.size());
}

TEST_CASE("trajectory without sign changes reports no crossings") {
    const Trajectory traj = trajectory(Channel::werner_decay(0.3, 1.0), 2.0, 50);
    CHECK_FALSE(traj.bell_crossing_time.has_value());
    CHECK_FALSE(traj.usefulness_crossing_time.has_value());
}

TEST_CASE("trajectory argument checks") {
    const Channel c = Channel::werner_decay(0.9, 1.0);
    CHECK(kind_of([&] { trajectory(c, 1.0, 1); }) == ErrorKind::BadSteps);
    CHECK(kind_of([&] { trajectory(c, -1.0, 10); }) == ErrorKind::NegativeTime);
    CHECK(kind_of([&] { trajectory(c, 0.0, 10); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("audit of constant trajectories") {
    const TrajectoryAudit mixed = audit_trajectory(constant_trajectory(maximally_mixed({2, 2}), 20));
    CHECK(mixed.violations == 0);
    for (const auto& a : mixed.points) {
        CHECK(a.eq10_applicable);
        CHECK(a.eq10_holds);
    }
    const TrajectoryAudit bell = audit_trajectory(constant_trajectory(singlet(), 20));
    CHECK(bell.violations == 0);
    for (const auto& a : bell.points) {
        CHECK(a.eq11_applicable);
        CHECK(a.eq11_holds);
    }
}

TEST_CASE("audit reports the first violating point") {
    Trajectory t = constant_trajectory(werner2(0.6), 5);
    t.reports[3].d_g_max = 0.1;  // below (3F-2)^2 = 0.16
    const TrajectoryAudit audit = audit_trajectory(t);
    CHECK(audit.violations == 1);
    REQUIRE(audit.first_violation.has_value());
    CHECK(*audit.first_violation == 3);
}

TEST_CASE("bisect_transition") {
    const double root = bisect_transition([](double x) { return x * x > 2.0; }, 0.0, 2.0);
    CHECK(std::abs(root - std::sqrt(2.0)) < 1e-11);
}
