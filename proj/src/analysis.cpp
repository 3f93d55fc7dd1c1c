#include "qcorr/analysis.hpp"

#include <cmath>

#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void check_range(double from, double to, std::size_t steps) {
    if (steps < 2) throw Error(ErrorKind::BadSteps, "need at least two grid points");
    if (!(from < to)) throw Error(ErrorKind::ParamOutOfRange, "sweep requires from < to");
    if (from < 0.0 || to > 1.0) throw Error(ErrorKind::ParamOutOfRange, "sweep range must lie in [0, 1]");
}

std::vector<double> grid(double from, double to, std::size_t steps) {
    std::vector<double> out(steps);
    for (std::size_t i = 0; i < steps; ++i)
        out[i] = from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
    out.back() = to;
    return out;
}

// First sign flip of `pred` along the grid, refined by bisection.
std::optional<double> locate(const std::vector<double>& params, const std::function<bool(double)>& pred) {
    bool prev = pred(params.front());
    for (std::size_t i = 1; i < params.size(); ++i) {
        const bool cur = pred(params[i]);
        if (cur != prev) return bisect_transition(pred, params[i - 1], params[i]);
        prev = cur;
    }
    return std::nullopt;
}

HighDimReport family_report(StateFamily family, std::size_t d, double param) {
    return family == StateFamily::Isotropic ? isotropic_report(d, param) : werner_d_report(d, param);
}

}  // namespace

StateFamily parse_state_family(const std::string& name) {
    if (name == "werner") return StateFamily::Werner2;
    if (name == "isotropic") return StateFamily::Isotropic;
    if (name == "werner-d") return StateFamily::WernerD;
    throw Error(ErrorKind::ParamOutOfRange, "unknown state family '" + name + "'");
}

const char* to_string(StateFamily family) {
    switch (family) {
        case StateFamily::Werner2: return "werner";
        case StateFamily::Isotropic: return "isotropic";
        case StateFamily::WernerD: return "werner-d";
    }
    return "werner";
}

HighDimReport isotropic_report(std::size_t d, double f) {
    const DensityMatrix rho = isotropic(d, f);
    HighDimReport r = generic_report(rho);
    r.family = "isotropic";
    r.param = f;
    r.negativity = isotropic_negativity(d, f);
    r.witness_expectation = r.wf_expectation;
    r.detected = r.witness_expectation < 0.0;
    if (r.detected) r.witness_bound = discord_lower_bound_witness_isotropic(d, r.witness_expectation);
    r.fidelity = isotropic_fidelity(d, f);
    if (*r.fidelity > 2.0 / (static_cast<double>(d) + 1.0))
        r.fidelity_bound = discord_lower_bound_fidelity(d, *r.fidelity);
    return r;
}

HighDimReport werner_d_report(std::size_t d, double w) {
    const DensityMatrix rho = werner_d(d, w);
    HighDimReport r = generic_report(rho);
    r.family = "werner-d";
    r.param = w;
    r.negativity = werner_d_negativity(d, w);
    r.witness_expectation = r.wx_expectation;
    r.detected = r.witness_expectation < 0.0;
    if (r.detected) r.witness_bound = discord_lower_bound_witness_werner(d, r.witness_expectation);
    r.singlet_fraction_bound = singlet_fraction_bound_werner(d, w);
    return r;
}

HighDimReport generic_report(const DensityMatrix& rho) {
    const Dims dims = rho.dims();
    if (dims.a != dims.b) throw Error(ErrorKind::DimensionMismatch, "d x d report needs dA = dB");
    HighDimReport r;
    r.family = "generic";
    r.d = dims.a;
    r.negativity_numeric = negativity_numeric(rho);
    r.wf_expectation = witness_expectation(make_witness(WitnessFamily::IsotropicWf, r.d), rho);
    r.wx_expectation = witness_expectation(make_witness(WitnessFamily::WernerWx, r.d), rho);
    r.witness_expectation = r.wf_expectation;
    r.detected = r.wf_expectation < 0.0 || r.wx_expectation < 0.0;
    return r;
}

TwoQubitSweep sweep_werner2(double from, double to, std::size_t steps, const Thresholds& thresholds) {
    check_range(from, to, steps);
    const auto params = grid(from, to, steps);
    TwoQubitSweep out;
    auto row_at = [&](double p, std::string annotation) {
        TwoQubitRow row;
        row.param = p;
        row.report = full_report(werner2(p), thresholds);
        row.audit = audit_theorems(row.report, thresholds);
        row.annotation = std::move(annotation);
        return row;
    };
    for (double p : params) out.rows.push_back(row_at(p, {}));

    const double eq9_edge = std::sqrt(thresholds.critical_discord);
    const std::vector<std::pair<std::string, std::function<bool(double)>>> predicates{
        {"bell", [&](double p) { return full_report(werner2(p), thresholds).m > thresholds.bell_m; }},
        {"useful",
         [&](double p) { return full_report(werner2(p), thresholds).fidelity > thresholds.useful_fidelity; }},
        {"eq9_edge",
         [&](double p) { return 3.0 * full_report(werner2(p), thresholds).fidelity - 2.0 > eq9_edge; }},
    };
    for (const auto& [name, pred] : predicates) {
        if (auto where = locate(params, pred)) {
            out.thresholds.push_back({name, *where});
            out.rows.push_back(row_at(*where, "threshold:" + name));
        }
    }
    return out;
}

HighDimSweep sweep_highdim(StateFamily family, std::size_t d, double from, double to, std::size_t steps) {
    if (family == StateFamily::Werner2) {
        throw Error(ErrorKind::ParamOutOfRange, "use sweep_werner2 for the two-qubit Werner family");
    }
    check_range(from, to, steps);
    const auto params = grid(from, to, steps);
    HighDimSweep out;
    for (double p : params) out.rows.push_back({p, family_report(family, d, p), {}});

    auto detected = [&](double p) { return family_report(family, d, p).witness_expectation < 0.0; };
    if (auto where = locate(params, detected)) {
        out.thresholds.push_back({"detection", *where});
        out.rows.push_back({*where, family_report(family, d, *where), "threshold:detection"});
    }
    return out;
}

}  // namespace qcorr
