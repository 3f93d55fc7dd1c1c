#include <doctest.h>

#include <sstream>

#include "qcorr/analysis.hpp"
#include "qcorr/report_io.hpp"

using namespace qcorr;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::size_t columns(const std::string& line) { return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1; }

}  // namespace

TEST_CASE("number formatting uses nine significant digits") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(2.0 / 3.0) == "0.666666667");
    CHECK(format_number(1e-20) == "1e-20");
    CHECK(round_significant(1.0 / 3.0) == 0.333333333);
}

TEST_CASE("two-qubit CSV schema") {
    CHECK(two_qubit_csv_header() ==
          "param_or_time,d_g,d_g_min,d_g_max,m,u,fidelity,negativity,regime,eq9,eq10,eq11\n");
    const CorrelationReport r = full_report(werner2(0.6));
    const std::string row = two_qubit_csv_row(0.6, r, audit_theorems(r));
    CHECK(row == "0.6,0.24,0.24,0.24,0.72,1.8,0.8,0.4,BellSatisfiedUseful,holds,n/a,n/a\n");

    const auto csv = lines(to_csv(sweep_werner2(0.0, 1.0, 21)));
    CHECK(csv.front() + "\n" == two_qubit_csv_header());
    for (const auto& line : csv) CHECK(columns(line) == 12);
    CHECK(csv.size() == 1 + 21 + 3);
    CHECK(csv.back().find("threshold:") != std::string::npos);
}

TEST_CASE("trajectory CSV appends crossing annotations") {
    const Channel c = Channel::werner_decay(0.95, 5.0);
    const auto csv = lines(to_csv(trajectory(c, 1.0, 11), c));
    CHECK(csv.size() == 1 + 11 + 2);
    CHECK(csv[12].find("threshold:bell") != std::string::npos);
    CHECK(csv[13].find("threshold:useful") != std::string::npos);
}

TEST_CASE("high-dimensional CSV schema") {
    const auto csv = lines(to_csv(sweep_highdim(StateFamily::WernerD, 3, 0.0, 1.0, 5)));
    CHECK(csv.front() ==
          "param,d,negativity,negativity_numeric,witness_expectation,witness_bound,fidelity,fidelity_bound,"
          "singlet_fraction_bound,detected,normalization");
    for (const auto& line : csv) CHECK(columns(line) == 11);
    CHECK(csv.back().find("threshold:detection") != std::string::npos);
}

TEST_CASE("measurement-plan CSV and JSON") {
    const auto dec = witness_local_decomposition(make_witness(WitnessFamily::IsotropicWf, 2));
    CHECK(to_csv(dec) == "generator_a,generator_b,coefficient\nI,I,0.25\nX,X,-0.25\nY,Y,0.25\nZ,Z,-0.25\n");
    const auto j = to_json(dec);
    CHECK(j["settings"] == 4);
    CHECK(j["basis"] == "pauli");
    CHECK(j["terms"].size() == 4);
}

TEST_CASE("report JSON content") {
    const auto j = to_json(full_report(werner2(0.8)));
    CHECK(j["d_g"].get<double>() == 0.426666667);
    CHECK(j["m"].get<double>() == 1.28);
    CHECK(j["fidelity"].get<double>() == 0.9);
    CHECK(j["regime"] == "BellViolatingUseful");

    const auto a = to_json(audit_theorems(full_report(werner2(0.8))));
    CHECK(a["eq11"]["applicable"] == true);
    CHECK(a["eq9"]["applicable"] == false);

    const auto h = to_json(werner_d_report(2, 1.0));
    CHECK(h["bound_normalization"] == "monotone");
    CHECK(h["singlet_fraction_bound"]["clipped"] == true);
    CHECK(h["fidelity"].is_null());
}
