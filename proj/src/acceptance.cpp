#include "qcorr/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <sstream>

#include "qcorr/analysis.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/highdim.hpp"
#include "qcorr/oracle.hpp"

namespace qcorr {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

// Random two-qubit states cycling through ranks 1..4.
DensityMatrix random_two_qubit(Rng& rng, std::size_t i) {
    return {{2, 2}, random_density_matrix(2, 2, 1 + i % 4, rng)};
}

struct Tally {
    std::size_t violations = 0;
    double worst = 0.0;

    // `excess` > tol counts as a violation; tracks the largest excess seen.
    void check(double excess, double tol) {
        worst = std::max(worst, excess);
        if (excess > tol) ++violations;
    }
};

CriterionResult identity_dgmax_m(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Rng rng(derive_seed(opt.seed, 1));
    Tally tally;
    for (std::size_t i = 0; i < 10000; ++i) {
        const auto r = full_report(random_two_qubit(rng, i), opt.thresholds);
        tally.check(std::abs(r.d_g_max - r.m / 3.0), 1e-12);
    }
    const double elapsed = seconds_since(start);
    CriterionResult out{1, "D_G^max = M/3 on 1e4 random states", tally.violations == 0 && elapsed < 10.0, {}, elapsed};
    out.detail = "violations=" + std::to_string(tally.violations) + " max_gap=" + sci(tally.worst);
    return out;
}

CriterionResult werner_closed_forms(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Tally tally;
    const std::size_t points = 1000;
    for (std::size_t i = 0; i < points; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(points - 1);
        const auto r = full_report(werner2(p), opt.thresholds);
        tally.check(std::abs(r.d_g - 2.0 / 3.0 * p * p), 1e-10);
        tally.check(std::abs(r.fidelity - (1.0 + p) / 2.0), 1e-10);
        tally.check(std::abs(r.m - 2.0 * p * p), 1e-10);
        tally.check(std::abs(r.negativity - std::max(0.0, (3.0 * p - 1.0) / 2.0)), 1e-10);
    }
    const auto sweep = sweep_werner2(0.0, 1.0, points, opt.thresholds);
    auto find = [&](const std::string& name) -> double {
        for (const auto& t : sweep.thresholds)
            if (t.name == name) return t.value;
        return std::nan("");
    };
    const double bell = find("bell");
    const double edge = find("eq9_edge");
    const bool bell_ok = std::abs(bell - 1.0 / std::sqrt(2.0)) <= 1e-6;
    const bool edge_ok = std::abs(edge - (1.0 / 3.0 + 2.0 / (3.0 * std::sqrt(3.0)))) <= 1e-4;
    CriterionResult out{2, "Werner closed forms and thresholds", tally.violations == 0 && bell_ok && edge_ok, {},
                        seconds_since(start)};
    out.detail = "violations=" + std::to_string(tally.violations) + " max_err=" + sci(tally.worst) +
                 " bell=" + sci(bell) + " eq9_edge=" + sci(edge);
    return out;
}

CriterionResult weyl(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    const std::size_t total = 100000;
    std::size_t samples = 0, violations = 0;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t n = 2; n <= 8; ++n) {
        const std::size_t share = (total + 6) / 7;
        const auto report = weyl_property_driver(n, share, derive_seed(opt.seed, 300 + n), 1e-10);
        samples += report.samples;
        violations += report.violations;
        worst = std::min(worst, report.worst_margin);
    }
    CriterionResult out{3, "Weyl eigenvalue inequality", violations == 0 && samples >= total, {}, seconds_since(start)};
    out.detail = "pairs=" + std::to_string(samples) + " violations=" + std::to_string(violations) +
                 " worst_margin=" + sci(worst);
    return out;
}

CriterionResult sandwich(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Rng rng(derive_seed(opt.seed, 4));
    Tally tally;
    for (std::size_t i = 0; i < 10000; ++i) {
        const auto r = full_report(random_two_qubit(rng, i), opt.thresholds);
        tally.check(r.d_g_min - r.d_g, 1e-12);
        tally.check(r.d_g - r.d_g_max, 1e-12);
    }
    Tally equality;
    for (std::size_t i = 0; i <= 100; ++i) {
        const auto r = full_report(werner2(static_cast<double>(i) / 100.0), opt.thresholds);
        equality.check(std::abs(r.d_g_min - r.d_g), 1e-12);
        equality.check(std::abs(r.d_g_max - r.d_g), 1e-12);
    }
    CriterionResult out{4, "Weyl sandwich and Werner equality", tally.violations == 0 && equality.violations == 0, {},
                        seconds_since(start)};
    out.detail = "violations=" + std::to_string(tally.violations) + " equality_violations=" +
                 std::to_string(equality.violations) + " max_excess=" + sci(tally.worst);
    return out;
}

CriterionResult inequality_suite(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Rng rng(derive_seed(opt.seed, 5));
    Tally gain, fidelity_negativity, m_u, negativity_discord;
    std::size_t entangled = 0;
    for (std::size_t i = 0; i < 10000; ++i) {
        const DensityMatrix rho = random_two_qubit(rng, i);
        const auto r = full_report(rho, opt.thresholds);
        gain.check(r.d_g_max - (2.0 * r.fidelity - 1.0), 1e-10);
        fidelity_negativity.check((3.0 * r.fidelity - 2.0) - r.negativity, 1e-10);
        m_u.check(r.m - r.u, 1e-10);
        if (r.negativity > 1e-8) {
            ++entangled;
            negativity_discord.check(r.negativity * r.negativity - geometric_discord(rho, Normalization::Monotone),
                                     1e-10);
        }
    }
    const std::size_t total =
        gain.violations + fidelity_negativity.violations + m_u.violations + negativity_discord.violations;
    CriterionResult out{5, "two-qubit inequality suite", total == 0, {}, seconds_since(start)};
    out.detail = "dgmax<=2F-1:" + std::to_string(gain.violations) +
                 " 3F-2<=N:" + std::to_string(fidelity_negativity.violations) +
                 " M<=U:" + std::to_string(m_u.violations) +
                 " N^2<=D_G(monotone):" + std::to_string(negativity_discord.violations) + "/" +
                 std::to_string(entangled);
    return out;
}

CriterionResult separable_suite(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Rng rng(derive_seed(opt.seed, 6));
    Tally m_tally, dg_tally;
    for (std::size_t i = 0; i < 10000; ++i) {
        const std::size_t terms = 1 + i % 8;
        const DensityMatrix rho({2, 2}, random_separable_state(terms, rng));
        const auto r = full_report(rho, opt.thresholds);
        m_tally.check(r.m - opt.thresholds.bell_m, 1e-9);
        dg_tally.check(r.d_g_max - opt.thresholds.critical_discord, 1e-9);
    }
    const auto r1 = full_report(rho1(), opt.thresholds);
    const bool rho1_ok = std::abs(r1.d_g_max - 1.0 / 3.0) <= 1e-12 && std::abs(r1.d_g) <= 1e-12;
    CriterionResult out{6, "separable states: M <= 1, D_G^max <= 1/3; rho1 extremal",
                        m_tally.violations == 0 && dg_tally.violations == 0 && rho1_ok, {}, seconds_since(start)};
    out.detail = "M_violations=" + std::to_string(m_tally.violations) +
                 " dgmax_violations=" + std::to_string(dg_tally.violations) +
                 " rho1_dgmax=" + sci(r1.d_g_max) + " rho1_dg=" + sci(r1.d_g);
    return out;
}

CriterionResult oracle_equivalence(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    Rng rng(derive_seed(opt.seed, 7));
    Tally tally;
    std::vector<DensityMatrix> states;
    for (std::size_t i = 0; i < 100; ++i) states.push_back(random_two_qubit(rng, i));

    OracleOptions oo;
    oo.restarts = 64;
    oo.seed = derive_seed(opt.seed, 70);
    double first_value = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto res = discord_bruteforce(states[i], oo);
        if (i == 0) first_value = res.value;
        tally.check(std::abs(res.value - geometric_discord(states[i])), 1e-4);
    }
    const bool deterministic = discord_bruteforce(states[0], oo).value == first_value;
    const double elapsed = seconds_since(start);
    CriterionResult out{7, "brute-force discord matches closed form",
                        tally.violations == 0 && deterministic && elapsed < 180.0, {}, elapsed};
    out.detail = "violations=" + std::to_string(tally.violations) + " max_gap=" + sci(tally.worst) +
                 (deterministic ? " deterministic" : " NONDETERMINISTIC");
    return out;
}

CriterionResult isotropic_chain(const AcceptanceOptions&) {
    const auto start = Clock::now();
    Tally expectation, identity, numeric, fidelity, d2_bound;
    for (std::size_t d = 2; d <= 5; ++d) {
        const double dd = static_cast<double>(d);
        const Witness wf = make_witness(WitnessFamily::IsotropicWf, d);
        const ComplexMatrix phi = phi_plus_projector(d);
        for (std::size_t i = 0; i < 50; ++i) {
            const double f = static_cast<double>(i) / 49.0;
            const DensityMatrix rho = isotropic(d, f);
            const double e = witness_expectation(wf, rho);
            expectation.check(std::abs(e - (1.0 / dd - f)), 1e-12);
            const double n = isotropic_negativity(d, f);
            if (f > 1.0 / dd) identity.check(std::abs(dd / (dd - 1.0) * (-e) - n), 1e-12);
            numeric.check(std::abs(negativity_numeric(rho) - n), 1e-10);

            double singlet_fraction = 0.0;
            for (std::size_t r = 0; r < d * d; ++r)
                for (std::size_t c = 0; c < d * d; ++c) singlet_fraction += (phi(r, c) * rho.matrix()(c, r)).real();
            fidelity.check(std::abs(isotropic_fidelity(d, f) - (dd * singlet_fraction + 1.0) / (dd + 1.0)), 1e-12);
            if (d == 2) {
                // U(rho) optimises over local unitaries; it equals the singlet-fraction
                // route only while the equivalent Werner weight (4f-1)/3 is non-negative.
                if (f >= 0.25) fidelity.check(std::abs(isotropic_fidelity(d, f) - teleportation_fidelity(rho)), 1e-10);
                if (f > 0.5) {
                    d2_bound.check(discord_lower_bound_witness_isotropic(d, e) -
                                       geometric_discord(rho, Normalization::Monotone),
                                   1e-10);
                }
            }
        }
    }
    const std::size_t total =
        expectation.violations + identity.violations + numeric.violations + fidelity.violations + d2_bound.violations;
    CriterionResult out{8, "isotropic witness/negativity/fidelity chain", total == 0, {}, seconds_since(start)};
    out.detail = "expectation:" + std::to_string(expectation.violations) +
                 " identity:" + std::to_string(identity.violations) + " numeric_N:" +
                 std::to_string(numeric.violations) + " fidelity:" + std::to_string(fidelity.violations) +
                 " d2_bound:" + std::to_string(d2_bound.violations);
    return out;
}

CriterionResult werner_chain(const AcceptanceOptions&) {
    const auto start = Clock::now();
    Tally expectation, numeric, bound, boundary;
    for (std::size_t d = 2; d <= 5; ++d) {
        const double dd = static_cast<double>(d);
        const Witness wx = make_witness(WitnessFamily::WernerWx, d);
        for (std::size_t i = 0; i < 50; ++i) {
            const double w = static_cast<double>(i) / 49.0;
            const DensityMatrix rho = werner_d(d, w);
            const double e = witness_expectation(wx, rho);
            expectation.check(std::abs(e - (1.0 - 2.0 * w) / dd), 1e-12);
            if (w > 0.5) {
                const double n = werner_d_negativity(d, w);
                numeric.check(std::abs(negativity_numeric(rho) - n), 1e-10);
                bound.check(std::abs(discord_lower_bound_witness_werner(d, e) - n * n), 1e-12);
            }
        }
        const DensityMatrix edge = werner_d(d, 0.5);
        const double lowest = eigvalsh(partial_transpose(edge.matrix(), edge.dims(), Subsystem::A)).front();
        boundary.check(std::abs(lowest), 1e-10);
    }
    const std::size_t total = expectation.violations + numeric.violations + bound.violations + boundary.violations;
    CriterionResult out{9, "Werner-d witness/negativity chain", total == 0, {}, seconds_since(start)};
    out.detail = "expectation:" + std::to_string(expectation.violations) +
                 " numeric_N:" + std::to_string(numeric.violations) + " bound:" + std::to_string(bound.violations) +
                 " ppt_boundary:" + std::to_string(boundary.violations);
    return out;
}

CriterionResult trajectory_regimes(const AcceptanceOptions& opt) {
    const auto start = Clock::now();
    const double p0 = 0.95, gamma = 5.0;
    const Channel channel = Channel::werner_decay(p0, gamma);
    const Trajectory traj = trajectory(channel, 1.0, 1000, opt.thresholds);

    std::vector<Regime> sequence;
    for (const auto& r : traj.reports)
        if (sequence.empty() || sequence.back() != r.regime) sequence.push_back(r.regime);
    const bool order_ok = sequence == std::vector<Regime>{Regime::BellViolatingUseful, Regime::BellSatisfiedUseful,
                                                          Regime::NotUseful};

    const double bell_expected = std::log(p0 * std::sqrt(2.0)) / gamma;
    const double useful_expected = std::log(3.0 * p0) / gamma;
    const double bell_err = traj.bell_crossing_time ? std::abs(*traj.bell_crossing_time - bell_expected) : 1.0;
    const double useful_err =
        traj.usefulness_crossing_time ? std::abs(*traj.usefulness_crossing_time - useful_expected) : 1.0;
    const auto audit = audit_trajectory(traj, opt.thresholds);

    CriterionResult out{10, "WernerDecay regime sequence and theorem audit",
                        order_ok && bell_err <= 1e-6 && useful_err <= 1e-6 && audit.violations == 0, {},
                        seconds_since(start)};
    out.detail = std::string(order_ok ? "order ok" : "order WRONG") + " bell_err=" + sci(bell_err) +
                 " useful_err=" + sci(useful_err) + " audit_violations=" + std::to_string(audit.violations);
    return out;
}

CriterionResult witness_decomposition(const AcceptanceOptions&, Clock::time_point suite_start) {
    const auto start = Clock::now();
    double worst = 0.0;
    for (std::size_t d = 2; d <= 4; ++d)
        for (auto family : {WitnessFamily::IsotropicWf, WitnessFamily::WernerWx})
            worst = std::max(worst, witness_local_decomposition(make_witness(family, d)).residual);
    const double total_elapsed = seconds_since(suite_start);
    CriterionResult out{11, "witness decomposition and selftest budget",
                        worst <= 1e-12 && total_elapsed < kSelftestBudgetSeconds, {}, seconds_since(start)};
    out.detail = "max_residual=" + sci(worst) + " suite_seconds=" + sci(total_elapsed);
    return out;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
    const auto suite_start = Clock::now();
    const std::vector<std::function<CriterionResult()>> criteria{
        [&] { return identity_dgmax_m(options); },
        [&] { return werner_closed_forms(options); },
        [&] { return weyl(options); },
        [&] { return sandwich(options); },
        [&] { return inequality_suite(options); },
        [&] { return separable_suite(options); },
        [&] { return oracle_equivalence(options); },
        [&] { return isotropic_chain(options); },
        [&] { return werner_chain(options); },
        [&] { return trajectory_regimes(options); },
        [&] { return witness_decomposition(options, suite_start); },
    };
    std::vector<CriterionResult> results;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!options.only.empty() && !options.only.contains(id)) continue;
        results.push_back(criteria[i]());
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    char head[64];
    std::snprintf(head, sizeof head, "[%s] %2d ", r.passed ? "PASS" : "FAIL", r.id);
    char tail[48];
    std::snprintf(tail, sizeof tail, " (%.2f s) ", r.seconds);
    return std::string(head) + r.title + tail + r.detail;
}

}  // namespace qcorr
