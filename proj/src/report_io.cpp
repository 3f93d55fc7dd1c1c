#include "qcorr/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qcorr {

namespace {

using nlohmann::json;

const char* verdict(bool applicable, bool holds) {
    if (!applicable) return "n/a";
    return holds ? "holds" : "fails";
}

json optional_number(const std::optional<double>& v) {
    return v ? json(round_significant(*v)) : json(nullptr);
}

std::string optional_cell(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string{};
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

double round_significant(double value) { return std::stod(format_number(value)); }

json to_json(const CorrelationReport& r) {
    return {
        {"d_g", round_significant(r.d_g)},
        {"d_g_min", round_significant(r.d_g_min)},
        {"d_g_max", round_significant(r.d_g_max)},
        {"m", round_significant(r.m)},
        {"u", round_significant(r.u)},
        {"fidelity", round_significant(r.fidelity)},
        {"negativity", round_significant(r.negativity)},
        {"regime", to_string(r.regime)},
    };
}

json to_json(const TheoremAudit& a) {
    auto entry = [](bool applicable, bool holds) { return json{{"applicable", applicable}, {"holds", holds}}; };
    return {
        {"eq9", entry(a.eq9_applicable, a.eq9_holds)},
        {"eq10", entry(a.eq10_applicable, a.eq10_holds)},
        {"eq11", entry(a.eq11_applicable, a.eq11_holds)},
    };
}

json to_json(const BlochForm& form) {
    auto vec = [](const Vec3& v) {
        return json::array({round_significant(v[0]), round_significant(v[1]), round_significant(v[2])});
    };
    return {{"x", vec(form.x)}, {"y", vec(form.y)}, {"t", json::array({vec(form.t[0]), vec(form.t[1]), vec(form.t[2])})}};
}

json to_json(const HighDimReport& r) {
    json out = {
        {"family", r.family},
        {"d", r.d},
        {"param", optional_number(r.param)},
        {"negativity", optional_number(r.negativity)},
        {"negativity_numeric", round_significant(r.negativity_numeric)},
        {"wf_expectation", round_significant(r.wf_expectation)},
        {"wx_expectation", round_significant(r.wx_expectation)},
        {"witness_expectation", round_significant(r.witness_expectation)},
        {"detected", r.detected},
        {"witness_bound", optional_number(r.witness_bound)},
        {"fidelity", optional_number(r.fidelity)},
        {"fidelity_bound", optional_number(r.fidelity_bound)},
        {"bound_normalization", "monotone"},
    };
    if (r.singlet_fraction_bound) {
        out["singlet_fraction_bound"] = {
            {"value", round_significant(r.singlet_fraction_bound->value)},
            {"raw", round_significant(r.singlet_fraction_bound->raw)},
            {"clipped", r.singlet_fraction_bound->clipped},
        };
    } else {
        out["singlet_fraction_bound"] = nullptr;
    }
    return out;
}

json to_json(const ClassicalQuantumState& cq) {
    auto vec = [](const Vec3& v) {
        return json::array({round_significant(v[0]), round_significant(v[1]), round_significant(v[2])});
    };
    return {
        {"theta", round_significant(cq.theta)},
        {"phi", round_significant(cq.phi)},
        {"p1", round_significant(cq.p1)},
        {"r1", vec(cq.r1)},
        {"r2", vec(cq.r2)},
    };
}

json to_json(const GeneratorDecomposition& dec) {
    json terms = json::array();
    const std::size_t count = dec.labels.size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const double c = dec.coefficient(i, j);
            if (std::abs(c) > 1e-12)
                terms.push_back({{"a", dec.labels[i]}, {"b", dec.labels[j]}, {"coefficient", round_significant(c)}});
        }
    return {
        {"d", dec.d},
        {"basis", dec.basis},
        {"settings", dec.nonzero_terms},
        {"residual", dec.residual},
        {"terms", std::move(terms)},
    };
}

std::string two_qubit_csv_header() {
    return "param_or_time,d_g,d_g_min,d_g_max,m,u,fidelity,negativity,regime,eq9,eq10,eq11\n";
}

std::string two_qubit_csv_row(double param, const CorrelationReport& r, const TheoremAudit& a,
                              const std::string& annotation) {
    std::ostringstream out;
    out << format_number(param) << ',' << format_number(r.d_g) << ',' << format_number(r.d_g_min) << ','
        << format_number(r.d_g_max) << ',' << format_number(r.m) << ',' << format_number(r.u) << ','
        << format_number(r.fidelity) << ',' << format_number(r.negativity) << ','
        << (annotation.empty() ? to_string(r.regime) : annotation.c_str()) << ','
        << verdict(a.eq9_applicable, a.eq9_holds) << ',' << verdict(a.eq10_applicable, a.eq10_holds) << ','
        << verdict(a.eq11_applicable, a.eq11_holds) << '\n';
    return out.str();
}

std::string to_csv(const TwoQubitSweep& sweep) {
    std::string out = two_qubit_csv_header();
    for (const auto& row : sweep.rows) out += two_qubit_csv_row(row.param, row.report, row.audit, row.annotation);
    return out;
}

std::string to_csv(const Trajectory& traj, const Channel& channel, const Thresholds& thresholds) {
    std::string out = two_qubit_csv_header();
    for (std::size_t i = 0; i < traj.times.size(); ++i)
        out += two_qubit_csv_row(traj.times[i], traj.reports[i], audit_theorems(traj.reports[i], thresholds));
    auto annotate = [&](const std::optional<double>& t, const char* label) {
        if (!t) return;
        const CorrelationReport r = full_report(evolve(channel, *t), thresholds);
        out += two_qubit_csv_row(*t, r, audit_theorems(r, thresholds), label);
    };
    annotate(traj.bell_crossing_time, "threshold:bell");
    annotate(traj.usefulness_crossing_time, "threshold:useful");
    return out;
}

std::string highdim_csv_header() {
    return "param,d,negativity,negativity_numeric,witness_expectation,witness_bound,fidelity,fidelity_bound,"
           "singlet_fraction_bound,detected,normalization\n";
}

std::string highdim_csv_row(const HighDimReport& r, const std::string& annotation) {
    std::ostringstream out;
    out << optional_cell(r.param) << ',' << r.d << ',' << optional_cell(r.negativity) << ','
        << format_number(r.negativity_numeric) << ',' << format_number(r.witness_expectation) << ','
        << optional_cell(r.witness_bound) << ',' << optional_cell(r.fidelity) << ','
        << optional_cell(r.fidelity_bound) << ','
        << (r.singlet_fraction_bound ? format_number(r.singlet_fraction_bound->value) : std::string{}) << ','
        << (annotation.empty() ? (r.detected ? "true" : "false") : annotation) << ",monotone\n";
    return out.str();
}

std::string to_csv(const HighDimSweep& sweep) {
    std::string out = highdim_csv_header();
    for (const auto& row : sweep.rows) out += highdim_csv_row(row.report, row.annotation);
    return out;
}

std::string to_csv(const GeneratorDecomposition& dec) {
    std::string out = "generator_a,generator_b,coefficient\n";
    const std::size_t count = dec.labels.size();
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const double c = dec.coefficient(i, j);
            if (std::abs(c) > 1e-12) out += dec.labels[i] + ',' + dec.labels[j] + ',' + format_number(c) + '\n';
        }
    return out;
}

}  // namespace qcorr
