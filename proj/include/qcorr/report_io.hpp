#pragma once

#include <string>

#include <json.hpp>

#include "qcorr/analysis.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/oracle.hpp"

namespace qcorr {

/// Report numbers carry 9 significant digits.
std::string format_number(double value);
double round_significant(double value);

nlohmann::json to_json(const CorrelationReport& report);
nlohmann::json to_json(const TheoremAudit& audit);
nlohmann::json to_json(const BlochForm& form);
nlohmann::json to_json(const HighDimReport& report);
nlohmann::json to_json(const ClassicalQuantumState& cq);
nlohmann::json to_json(const GeneratorDecomposition& decomposition);

/// Fixed column order: param_or_time, d_g, d_g_min, d_g_max, m, u, fidelity,
/// negativity, regime, eq9, eq10, eq11. Threshold rows carry their label in
/// the regime column.
std::string two_qubit_csv_header();
std::string two_qubit_csv_row(double param, const CorrelationReport& report, const TheoremAudit& audit,
                              const std::string& annotation = {});
std::string to_csv(const TwoQubitSweep& sweep);
/// Grid rows followed by rows at the located crossing times.
std::string to_csv(const Trajectory& traj, const Channel& channel, const Thresholds& thresholds = {});

/// param, d, negativity, negativity_numeric, witness_expectation,
/// witness_bound, fidelity, fidelity_bound, singlet_fraction_bound, detected,
/// normalization. Empty cells mark quantities that do not apply.
std::string highdim_csv_header();
std::string highdim_csv_row(const HighDimReport& report, const std::string& annotation = {});
std::string to_csv(const HighDimSweep& sweep);

/// generator_a, generator_b, coefficient; nonzero terms only.
std::string to_csv(const GeneratorDecomposition& decomposition);

}  // namespace qcorr
