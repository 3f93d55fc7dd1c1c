#include "qcorr/dynamics.hpp"

#include <cmath>

#include "qcorr/error.hpp"

namespace qcorr {

Channel Channel::werner_decay(double p0, double rate) {
    if (!(p0 >= 0.0 && p0 <= 1.0)) throw Error(ErrorKind::ParamOutOfRange, "p0 must lie in [0, 1]");
    if (!(rate > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "rate must be positive");
    Channel c;
    c.kind = ChannelKind::WernerDecay;
    c.p0 = p0;
    c.rate = rate;
    return c;
}

Channel Channel::local_depolarizing(DensityMatrix initial, double rate) {
    if (initial.dims() != Dims{2, 2}) throw Error(ErrorKind::WrongDims, "channel acts on two qubits");
    if (!(rate > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "rate must be positive");
    Channel c;
    c.kind = ChannelKind::LocalDepolarizing;
    c.rate = rate;
    c.initial = std::move(initial);
    return c;
}

DensityMatrix evolve(const Channel& channel, double t) {
    if (!(t >= 0.0)) throw Error(ErrorKind::NegativeTime, "time must be non-negative");
    if (channel.kind == ChannelKind::WernerDecay) {
        if (t == 0.0) return werner2(channel.p0);
        return werner2(channel.p0 * std::exp(-channel.rate * t));
    }
    if (!channel.initial) throw Error(ErrorKind::ParamOutOfRange, "depolarizing channel needs an initial state");
    const DensityMatrix& rho = *channel.initial;
    if (t == 0.0) return rho;

    const double keep = std::exp(-channel.rate * t);  // 1 - q
    const double q = 1.0 - keep;
    const ComplexMatrix& m = rho.matrix();
    const ComplexMatrix half = 0.5 * ComplexMatrix::identity(2);
    const ComplexMatrix rho_a = partial_trace(m, {2, 2}, Subsystem::B);
    const ComplexMatrix rho_b = partial_trace(m, {2, 2}, Subsystem::A);
    ComplexMatrix out = (keep * keep) * m;
    out += (q * keep) * kron(half, rho_b);
    out += (keep * q) * kron(rho_a, half);
    out += (q * q) * kron(half, half);
    return {{2, 2}, out};
}

double bisect_transition(const std::function<bool(double)>& above, double lo, double hi, double tol) {
    const bool lo_state = above(lo);
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (above(mid) == lo_state) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Trajectory trajectory(const Channel& channel, double t_max, std::size_t steps, const Thresholds& thresholds) {
    if (t_max < 0.0) throw Error(ErrorKind::NegativeTime, "t_max must be non-negative");
    if (!(t_max > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "t_max must be positive");
    if (steps < 2) throw Error(ErrorKind::BadSteps, "need at least two grid points");

    Trajectory traj;
    traj.times.reserve(steps);
    traj.reports.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
        traj.times.push_back(t);
        traj.reports.push_back(full_report(evolve(channel, t), thresholds));
    }

    auto violates = [&](double t) { return full_report(evolve(channel, t), thresholds).m > thresholds.bell_m; };
    auto useful = [&](double t) {
        return full_report(evolve(channel, t), thresholds).fidelity > thresholds.useful_fidelity;
    };
    for (std::size_t i = 0; i + 1 < steps; ++i) {
        const auto& a = traj.reports[i];
        const auto& b = traj.reports[i + 1];
        if (!traj.bell_crossing_time && (a.m > thresholds.bell_m) != (b.m > thresholds.bell_m)) {
            traj.bell_crossing_time = bisect_transition(violates, traj.times[i], traj.times[i + 1]);
        }
        if (!traj.usefulness_crossing_time &&
            (a.fidelity > thresholds.useful_fidelity) != (b.fidelity > thresholds.useful_fidelity)) {
            traj.usefulness_crossing_time = bisect_transition(useful, traj.times[i], traj.times[i + 1]);
        }
    }
    return traj;
}

TrajectoryAudit audit_trajectory(const Trajectory& traj, const Thresholds& thresholds) {
    TrajectoryAudit audit;
    audit.points.reserve(traj.reports.size());
    for (std::size_t i = 0; i < traj.reports.size(); ++i) {
        const TheoremAudit a = audit_theorems(traj.reports[i], thresholds);
        if (!a.all_hold()) {
            ++audit.violations;
            if (!audit.first_violation) audit.first_violation = i;
        }
        audit.points.push_back(a);
    }
    return audit;
}

}  // namespace qcorr
