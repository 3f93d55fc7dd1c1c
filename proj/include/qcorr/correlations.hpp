#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Local Bloch vectors and correlation matrix of a two-qubit state:
/// x_i = Tr(rho sigma_i (x) I), y_i = Tr(rho I (x) sigma_i),
/// t_ij = Tr(rho sigma_i (x) sigma_j).
struct BlochForm {
    Vec3 x{};
    Vec3 y{};
    Mat3 t{};
};

/// Scale applied to min ||rho - chi||^2 over zero-discord states.
enum class Normalization {
    Paper,           // 4/3; default, the teleportation-normalized discord
    HilbertSchmidt,  // 1
    Monotone,        // 2; the scale under which N^2 <= D_G holds
};

double normalization_scale(Normalization n);
const char* to_string(Normalization n);
Normalization parse_normalization(const std::string& name);

/// Ordered from weakest to strongest: the regime label never increases along
/// a decohering trajectory.
enum class Regime {
    NotUseful = 0,
    BellSatisfiedUseful = 1,
    BellViolatingUseful = 2,
};

const char* to_string(Regime r);

struct CorrelationReport {
    double d_g = 0.0;
    double d_g_min = 0.0;
    double d_g_max = 0.0;
    double m = 0.0;
    double u = 0.0;
    double fidelity = 0.5;
    double negativity = 0.0;
    Regime regime = Regime::NotUseful;
};

/// Per-inequality verdicts. A non-applicable entry reports holds = true.
struct TheoremAudit {
    bool eq9_applicable = false;
    bool eq9_holds = true;
    bool eq10_applicable = false;
    bool eq10_holds = true;
    bool eq11_applicable = false;
    bool eq11_holds = true;

    bool all_hold() const { return eq9_holds && eq10_holds && eq11_holds; }
};

/// Decision constants of the regime logic and the theorem audit. The defaults
/// are the tested contract; the CLI surfaces them as flags.
struct Thresholds {
    double bell_m = 1.0;                  // Bell-CHSH violated iff M > bell_m
    double useful_fidelity = 2.0 / 3.0;   // useful for teleportation iff F > this
    double critical_discord = 1.0 / 3.0;  // D_G^max above which Bell is violated
    double audit_slack = 1e-12;
};

BlochForm bloch_decompose(const DensityMatrix& rho);

/// (1/4)(I(x)I + x.sigma(x)I + I(x)y.sigma + sum t_ij sigma_i(x)sigma_j).
ComplexMatrix bloch_reconstruct(const BlochForm& form);

/// Eigenvalues u_1 <= u_2 <= u_3 of T T^T.
Vec3 correlation_eigenvalues(const BlochForm& form);

/// Closed form s/4 (|x|^2 + ||T||^2 - lambda_max(x x^T + T T^T)).
double geometric_discord(const DensityMatrix& rho, Normalization n = Normalization::Paper);

struct DiscordBounds {
    double min = 0.0;
    double max = 0.0;
};

/// Weyl-derived bounds (1/3)(||T||^2 - u_max) and (1/3)(||T||^2 - u_min),
/// both in the default (4/3) normalization.
DiscordBounds discord_bounds(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T T^T.
double horodecki_m(const DensityMatrix& rho);

/// Sum of the square roots of the eigenvalues of T T^T.
double horodecki_u(const DensityMatrix& rho);

/// F = (1 + U/3)/2.
double teleportation_fidelity(const DensityMatrix& rho);

/// ||rho^{T_A}||_1 - 1, clipped at zero.
double negativity2(const DensityMatrix& rho);

Regime classify_regime(const CorrelationReport& report, const Thresholds& thresholds = {});

TheoremAudit audit_theorems(const CorrelationReport& report, const Thresholds& thresholds = {});

CorrelationReport full_report(const DensityMatrix& rho, const Thresholds& thresholds = {});

}  // namespace qcorr
