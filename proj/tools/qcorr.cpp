// qcorr: batch command-line front end for the correlation toolkit.
//
// Exit codes: 0 ok, 1 selftest failure, 2 bad arguments or violated state
// invariants, 3 parse errors, 4 oracle/closed-form discrepancy.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/acceptance.hpp"
#include "qcorr/analysis.hpp"
#include "qcorr/error.hpp"
#include "qcorr/report_io.hpp"

namespace {

using nlohmann::json;
using namespace qcorr;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitParse = 3;
constexpr int kExitDiscrepancy = 4;

struct GlobalFlags {
    std::string format;  // empty: command default
    std::uint64_t seed = 42;
    Thresholds thresholds;
};

struct StateFlags {
    std::string input;
    std::string state;
    std::optional<double> p, f, w;
    std::size_t d = 2;
};

bool want_csv(const GlobalFlags& g, bool csv_default) {
    if (g.format.empty()) return csv_default;
    return g.format == "csv";
}

void print_json(const json& doc) { std::cout << doc.dump(2) << '\n'; }

json two_qubit_document(const DensityMatrix& rho, const Thresholds& th) {
    const CorrelationReport report = full_report(rho, th);
    json doc = to_json(report);
    doc["dims"] = {2, 2};
    doc["d_g_hs"] = round_significant(geometric_discord(rho, Normalization::HilbertSchmidt));
    doc["d_g_monotone"] = round_significant(geometric_discord(rho, Normalization::Monotone));
    doc["bloch"] = to_json(bloch_decompose(rho));
    doc["audit"] = to_json(audit_theorems(report, th));
    return doc;
}

void emit_two_qubit(const DensityMatrix& rho, std::optional<double> param, const GlobalFlags& g) {
    if (want_csv(g, false)) {
        const CorrelationReport report = full_report(rho, g.thresholds);
        std::string row = two_qubit_csv_row(param.value_or(0.0), report, audit_theorems(report, g.thresholds));
        if (!param) row = row.substr(row.find(','));
        std::cout << two_qubit_csv_header() << row;
        return;
    }
    json doc = two_qubit_document(rho, g.thresholds);
    if (param) doc["param"] = round_significant(*param);
    print_json(doc);
}

void emit_highdim(const HighDimReport& report, const GlobalFlags& g) {
    if (want_csv(g, false)) {
        std::cout << highdim_csv_header() << highdim_csv_row(report);
        return;
    }
    print_json(to_json(report));
}

double require(const std::optional<double>& v, const char* flag) {
    if (!v) throw Error(ErrorKind::ParamOutOfRange, std::string("missing ") + flag);
    return *v;
}

int cmd_analyze(const StateFlags& s, const GlobalFlags& g) {
    if (s.input.empty() == s.state.empty()) {
        throw Error(ErrorKind::ParamOutOfRange, "give exactly one of --input or --state");
    }
    if (!s.input.empty()) {
        const DensityMatrix rho = load_state(s.input);
        if (rho.dims() == Dims{2, 2}) {
            emit_two_qubit(rho, std::nullopt, g);
        } else {
            emit_highdim(generic_report(rho), g);
        }
        return kExitOk;
    }
    const std::string& name = s.state;
    if (name == "werner") {
        const double p = require(s.p, "--p");
        emit_two_qubit(werner2(p), p, g);
    } else if (name == "rho1") {
        emit_two_qubit(rho1(), std::nullopt, g);
    } else if (name == "singlet") {
        emit_two_qubit(singlet(), std::nullopt, g);
    } else if (name == "maximally-mixed") {
        if (s.d == 2) {
            emit_two_qubit(maximally_mixed({2, 2}), std::nullopt, g);
        } else {
            emit_highdim(generic_report(maximally_mixed({s.d, s.d})), g);
        }
    } else if (name == "bell") {
        if (s.d == 2) {
            emit_two_qubit(bell_phi_plus(2), std::nullopt, g);
        } else {
            emit_highdim(generic_report(bell_phi_plus(s.d)), g);
        }
    } else if (name == "isotropic") {
        const double f = require(s.f, "--f");
        if (s.d == 2) {
            emit_two_qubit(isotropic(2, f), f, g);
        } else {
            emit_highdim(isotropic_report(s.d, f), g);
        }
    } else if (name == "werner-d") {
        const double w = require(s.w, "--w");
        if (s.d == 2) {
            emit_two_qubit(werner_d(2, w), w, g);
        } else {
            emit_highdim(werner_d_report(s.d, w), g);
        }
    } else {
        throw Error(ErrorKind::ParamOutOfRange, "unknown state '" + name + "'");
    }
    return kExitOk;
}

struct SweepFlags {
    std::string state = "werner";
    std::string param;
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 101;
    std::size_t d = 2;
};

int cmd_sweep(const SweepFlags& s, const GlobalFlags& g) {
    const StateFamily family = parse_state_family(s.state);
    const char* expected = family == StateFamily::Werner2 ? "p" : family == StateFamily::Isotropic ? "f" : "w";
    if (!s.param.empty() && s.param != expected) {
        throw Error(ErrorKind::ParamOutOfRange,
                    "state '" + s.state + "' is swept over '" + expected + "', not '" + s.param + "'");
    }
    if (family == StateFamily::Werner2) {
        const TwoQubitSweep sweep = sweep_werner2(s.from, s.to, s.steps, g.thresholds);
        if (want_csv(g, true)) {
            std::cout << to_csv(sweep);
        } else {
            json rows = json::array();
            for (const auto& row : sweep.rows) {
                json r = to_json(row.report);
                r["param"] = round_significant(row.param);
                r["audit"] = to_json(row.audit);
                if (!row.annotation.empty()) r["annotation"] = row.annotation;
                rows.push_back(std::move(r));
            }
            json thresholds = json::object();
            for (const auto& t : sweep.thresholds) thresholds[t.name] = round_significant(t.value);
            print_json({{"state", s.state}, {"rows", rows}, {"thresholds", thresholds}});
        }
        return kExitOk;
    }
    const HighDimSweep sweep = sweep_highdim(family, s.d, s.from, s.to, s.steps);
    if (want_csv(g, true)) {
        std::cout << to_csv(sweep);
    } else {
        json rows = json::array();
        for (const auto& row : sweep.rows) {
            json r = to_json(row.report);
            if (!row.annotation.empty()) r["annotation"] = row.annotation;
            rows.push_back(std::move(r));
        }
        json thresholds = json::object();
        for (const auto& t : sweep.thresholds) thresholds[t.name] = round_significant(t.value);
        print_json({{"state", s.state}, {"d", s.d}, {"rows", rows}, {"thresholds", thresholds}});
    }
    return kExitOk;
}

struct OracleFlags {
    std::string input;
    int restarts = 64;
    std::string normalization = "paper";
    double gap_threshold = 1e-3;
};

int cmd_oracle(const OracleFlags& o, const GlobalFlags& g) {
    const DensityMatrix rho = load_state(o.input);
    OracleOptions options;
    options.restarts = o.restarts;
    options.seed = g.seed;
    options.normalization = parse_normalization(o.normalization);
    const OracleResult result = discord_bruteforce(rho, options);
    const double closed = geometric_discord(rho, options.normalization);
    const double gap = std::abs(result.value - closed);

    if (want_csv(g, false)) {
        std::cout << "oracle,closed_form,gap,converged,restarts\n"
                  << format_number(result.value) << ',' << format_number(closed) << ',' << format_number(gap) << ','
                  << (result.converged ? "true" : "false") << ',' << result.restarts_used << '\n';
    } else {
        print_json({
            {"normalization", o.normalization},
            {"oracle", round_significant(result.value)},
            {"closed_form", round_significant(closed)},
            {"gap", round_significant(gap)},
            {"converged", result.converged},
            {"restarts", result.restarts_used},
            {"seed", g.seed},
            {"best_params", to_json(result.best_params)},
        });
    }
    return gap > o.gap_threshold ? kExitDiscrepancy : kExitOk;
}

struct TrajectoryFlags {
    double p0 = 0.95;
    double gamma = 5.0;
    double tmax = 1.0;
    std::size_t steps = 1001;
    std::string input;
};

int cmd_trajectory(const TrajectoryFlags& t, const GlobalFlags& g) {
    const Channel channel = t.input.empty() ? Channel::werner_decay(t.p0, t.gamma)
                                            : Channel::local_depolarizing(load_state(t.input), t.gamma);
    const Trajectory traj = trajectory(channel, t.tmax, t.steps, g.thresholds);
    if (want_csv(g, true)) {
        std::cout << to_csv(traj, channel, g.thresholds);
        return kExitOk;
    }
    json points = json::array();
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        json p = to_json(traj.reports[i]);
        p["t"] = round_significant(traj.times[i]);
        p["audit"] = to_json(audit_theorems(traj.reports[i], g.thresholds));
        points.push_back(std::move(p));
    }
    auto optional_time = [](const std::optional<double>& v) { return v ? json(round_significant(*v)) : json(nullptr); };
    const TrajectoryAudit audit = audit_trajectory(traj, g.thresholds);
    print_json({
        {"points", points},
        {"bell_crossing_time", optional_time(traj.bell_crossing_time)},
        {"usefulness_crossing_time", optional_time(traj.usefulness_crossing_time)},
        {"audit_violations", audit.violations},
    });
    return kExitOk;
}

int cmd_witness_plan(const std::string& family, std::size_t d, const GlobalFlags& g) {
    const GeneratorDecomposition dec = witness_local_decomposition(make_witness(parse_witness_family(family), d));
    if (want_csv(g, false)) {
        std::cout << to_csv(dec);
    } else {
        json doc = to_json(dec);
        doc["family"] = family;
        print_json(doc);
    }
    return kExitOk;
}

int cmd_selftest(const std::vector<int>& only, const GlobalFlags& g) {
    AcceptanceOptions options;
    options.seed = g.seed;
    options.thresholds = g.thresholds;
    options.only.insert(only.begin(), only.end());
    bool all = true;
    for (const auto& result : run_acceptance(options)) {
        std::cout << format_result(result) << std::endl;
        all = all && result.passed;
    }
    std::cout << (all ? "selftest: all criteria passed" : "selftest: FAILED") << '\n';
    return all ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite quantum correlations: discord, Bell-CHSH, teleportation fidelity, witnesses"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Random seed")->envname("QCORR_SEED");
    app.add_option("--bell-m", g.thresholds.bell_m, "Bell-CHSH is violated iff M exceeds this");
    app.add_option("--useful-fidelity", g.thresholds.useful_fidelity, "Teleportation usefulness threshold");
    app.add_option("--critical-discord", g.thresholds.critical_discord, "Critical D_G^max for Bell violation");
    app.add_option("--audit-slack", g.thresholds.audit_slack, "Slack for theorem audits");

    StateFlags state_flags;
    auto* analyze = app.add_subcommand("analyze", "Report every measure of one state");
    analyze->add_option("--input", state_flags.input, "State JSON file");
    analyze->add_option("--state", state_flags.state,
                        "werner | rho1 | singlet | bell | maximally-mixed | isotropic | werner-d");
    analyze->add_option("--p", state_flags.p, "Two-qubit Werner weight");
    analyze->add_option("--f", state_flags.f, "Isotropic singlet fraction");
    analyze->add_option("--w", state_flags.w, "Werner-d antisymmetric weight");
    analyze->add_option("--d", state_flags.d, "Local dimension");

    SweepFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "Parameter sweep with located thresholds");
    sweep->add_option("--state", sweep_flags.state, "werner | isotropic | werner-d")->required();
    sweep->add_option("--param", sweep_flags.param, "Swept parameter (p, f or w)");
    sweep->add_option("--from", sweep_flags.from, "Start of range");
    sweep->add_option("--to", sweep_flags.to, "End of range");
    sweep->add_option("--steps", sweep_flags.steps, "Grid points");
    sweep->add_option("--d", sweep_flags.d, "Local dimension");

    OracleFlags oracle_flags;
    auto* oracle = app.add_subcommand("oracle", "Brute-force discord versus the closed form");
    oracle->add_option("--input", oracle_flags.input, "Two-qubit state JSON file")->required();
    oracle->add_option("--restarts", oracle_flags.restarts, "Nelder-Mead restarts");
    oracle->add_option("--normalization", oracle_flags.normalization, "paper | hs | monotone");
    oracle->add_option("--gap-threshold", oracle_flags.gap_threshold, "Gap above which exit code 4 is returned");

    double iso_f = 0.0;
    std::size_t iso_d = 2;
    auto* iso = app.add_subcommand("isotropic", "d x d isotropic state bounds");
    iso->add_option("--d", iso_d, "Local dimension")->required();
    iso->add_option("--f", iso_f, "Singlet fraction")->required();

    double wer_w = 0.0;
    std::size_t wer_d = 2;
    auto* wer = app.add_subcommand("werner", "d x d Werner state bounds");
    wer->add_option("--d", wer_d, "Local dimension");
    wer->add_option("--w", wer_w, "Antisymmetric weight")->required();

    TrajectoryFlags traj_flags;
    auto* traj = app.add_subcommand("trajectory", "Decoherence trajectory with regime crossings");
    traj->add_option("--p0", traj_flags.p0, "Initial Werner weight");
    traj->add_option("--gamma", traj_flags.gamma, "Decay rate");
    traj->add_option("--tmax", traj_flags.tmax, "Final time");
    traj->add_option("--steps", traj_flags.steps, "Grid points");
    traj->add_option("--input", traj_flags.input, "Evolve this state under local depolarizing noise instead");

    std::string plan_family;
    std::size_t plan_d = 2;
    auto* plan = app.add_subcommand("witness-plan", "Local generator decomposition of a witness");
    plan->add_option("--family", plan_family, "wf | wx")->required()->check(CLI::IsMember({"wf", "wx"}));
    plan->add_option("--d", plan_d, "Local dimension")->required();

    std::vector<int> only;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--only", only, "Run only these criterion ids")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*analyze) return cmd_analyze(state_flags, g);
        if (*sweep) return cmd_sweep(sweep_flags, g);
        if (*oracle) return cmd_oracle(oracle_flags, g);
        if (*iso) {
            emit_highdim(isotropic_report(iso_d, iso_f), g);
            return kExitOk;
        }
        if (*wer) {
            emit_highdim(werner_d_report(wer_d, wer_w), g);
            return kExitOk;
        }
        if (*traj) return cmd_trajectory(traj_flags, g);
        if (*plan) return cmd_witness_plan(plan_family, plan_d, g);
        if (*selftest) return cmd_selftest(only, g);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what();
        if (!e.detail().empty()) std::cerr << " [" << e.detail() << "]";
        std::cerr << '\n';
        return e.kind() == ErrorKind::ParseError ? kExitParse : kExitInvalid;
    }
    return kExitInvalid;
}
