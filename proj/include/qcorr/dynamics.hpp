#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

enum class ChannelKind { WernerDecay, LocalDepolarizing };

/// WernerDecay: werner2(p0 exp(-rate t)).
/// LocalDepolarizing: rho -> (1-q) rho + q I/2 on each qubit of `initial`,
/// q = 1 - exp(-rate t).
struct Channel {
    ChannelKind kind = ChannelKind::WernerDecay;
    double rate = 1.0;
    double p0 = 1.0;
    std::optional<DensityMatrix> initial;

    static Channel werner_decay(double p0, double rate);
    static Channel local_depolarizing(DensityMatrix initial, double rate);
};

DensityMatrix evolve(const Channel& channel, double t);

struct Trajectory {
    std::vector<double> times;
    std::vector<CorrelationReport> reports;
    std::optional<double> bell_crossing_time;
    std::optional<double> usefulness_crossing_time;
};

/// Uniform grid of `steps` points on [0, t_max]. Crossings of M = 1 and
/// F = 2/3 are refined by bisection inside the first grid cell where the
/// strict comparison changes sign.
Trajectory trajectory(const Channel& channel, double t_max, std::size_t steps,
                      const Thresholds& thresholds = {});

struct TrajectoryAudit {
    std::vector<TheoremAudit> points;
    std::size_t violations = 0;
    std::optional<std::size_t> first_violation;
};

TrajectoryAudit audit_trajectory(const Trajectory& traj, const Thresholds& thresholds = {});

/// Bisection on a predicate that flips between lo and hi; returns the
/// midpoint of the final bracket once it is narrower than `tol`.
double bisect_transition(const std::function<bool(double)>& above, double lo, double hi,
                         double tol = 1e-12);

}  // namespace qcorr
