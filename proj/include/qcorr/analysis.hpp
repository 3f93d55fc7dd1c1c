#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/highdim.hpp"

namespace qcorr {

enum class StateFamily { Werner2, Isotropic, WernerD };

StateFamily parse_state_family(const std::string& name);  // werner | isotropic | werner-d
const char* to_string(StateFamily family);

/// Bound report for one d x d state. Lower bounds on the discord refer to the
/// monotone normalization.
struct HighDimReport {
    std::string family;  // "isotropic", "werner-d" or "generic"
    std::size_t d = 0;
    std::optional<double> param;
    std::optional<double> negativity;  // closed form
    double negativity_numeric = 0.0;
    double wf_expectation = 0.0;
    double wx_expectation = 0.0;
    /// Expectation of the witness matched to the family (W_f for isotropic,
    /// W_x for Werner); W_f for generic input.
    double witness_expectation = 0.0;
    bool detected = false;
    std::optional<double> witness_bound;
    std::optional<double> fidelity;
    std::optional<double> fidelity_bound;
    std::optional<SingletFractionBound> singlet_fraction_bound;
};

HighDimReport isotropic_report(std::size_t d, double f);
HighDimReport werner_d_report(std::size_t d, double w);
HighDimReport generic_report(const DensityMatrix& rho);

struct TwoQubitRow {
    double param = 0.0;
    CorrelationReport report;
    TheoremAudit audit;
    std::string annotation;  // empty for grid rows, "threshold:<name>" otherwise
};

struct HighDimRow {
    double param = 0.0;
    HighDimReport report;
    std::string annotation;
};

struct Threshold {
    std::string name;
    double value = 0.0;
};

struct TwoQubitSweep {
    std::vector<TwoQubitRow> rows;         // grid rows then threshold rows
    std::vector<Threshold> thresholds;
};

struct HighDimSweep {
    std::vector<HighDimRow> rows;
    std::vector<Threshold> thresholds;
};

/// Grid over werner2(p). Thresholds located by bisection: "bell" (M = 1),
/// "useful" (F = 2/3) and "eq9_edge" ((3F - 2)^2 = critical discord).
TwoQubitSweep sweep_werner2(double from, double to, std::size_t steps, const Thresholds& thresholds = {});

/// Grid over isotropic(d, f) or werner_d(d, w). Threshold "detection" marks
/// where the family witness changes sign.
HighDimSweep sweep_highdim(StateFamily family, std::size_t d, double from, double to, std::size_t steps);

}  // namespace qcorr
