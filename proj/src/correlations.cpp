#include "qcorr/correlations.hpp"

#include <algorithm>
#include <cmath>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void require_two_qubits(const DensityMatrix& rho) {
    if (rho.dims().a != 2 || rho.dims().b != 2) {
        throw Error(ErrorKind::WrongDims, "expected a 2x2 (two-qubit) state");
    }
}

// Tr(rho (P_i (x) P_j)) using the sparsity of the Pauli matrices.
double pauli_expectation(const ComplexMatrix& rho, int i, int j) {
    const ComplexMatrix a = pauli(i);
    const ComplexMatrix b = pauli(j);
    cplx acc = 0.0;
    for (std::size_t r1 = 0; r1 < 2; ++r1)
        for (std::size_t c1 = 0; c1 < 2; ++c1) {
            if (a(r1, c1) == cplx{}) continue;
            for (std::size_t r2 = 0; r2 < 2; ++r2)
                for (std::size_t c2 = 0; c2 < 2; ++c2) {
                    if (b(r2, c2) == cplx{}) continue;
                    // (A(x)B)_{(r1 r2),(c1 c2)} rho_{(c1 c2),(r1 r2)}
                    acc += a(r1, c1) * b(r2, c2) * rho(c1 * 2 + c2, r1 * 2 + r2);
                }
        }
    return acc.real();
}

ComplexMatrix to_matrix(const Mat3& m) {
    ComplexMatrix out(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = m[i][j];
    return out;
}

Mat3 t_t_transpose(const Mat3& t) {
    Mat3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) out[i][j] += t[i][k] * t[j][k];
    return out;
}

double norm_sq(const Vec3& v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; }

double frobenius_sq(const Mat3& t) {
    double s = 0.0;
    for (const auto& row : t) s += norm_sq(row);
    return s;
}

double clip_small_negative(double value) {
    return (value < 0.0 && value > -1e-12) ? 0.0 : value;
}

struct Measures {
    double d_g = 0.0;
    DiscordBounds bounds;
    double m = 0.0;
    double u = 0.0;
};

double discord_from_form(const BlochForm& form, Normalization n) {
    Mat3 k = t_t_transpose(form.t);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) k[i][j] += form.x[i] * form.x[j];
    const double lambda_max = eigvalsh(to_matrix(k)).back();
    const double raw = norm_sq(form.x) + frobenius_sq(form.t) - lambda_max;
    return clip_small_negative(normalization_scale(n) / 4.0 * raw);
}

Measures measures_from_form(const BlochForm& form) {
    Measures out;
    out.d_g = discord_from_form(form, Normalization::Paper);
    const Vec3 u = correlation_eigenvalues(form);
    const double t_sq = frobenius_sq(form.t);
    out.bounds.min = clip_small_negative((t_sq - u[2]) / 3.0);
    out.bounds.max = clip_small_negative((t_sq - u[0]) / 3.0);
    out.m = u[2] + u[1];
    for (double ui : u) out.u += std::sqrt(std::max(0.0, ui));
    return out;
}

}  // namespace

double normalization_scale(Normalization n) {
    switch (n) {
        case Normalization::Paper: return 4.0 / 3.0;
        case Normalization::HilbertSchmidt: return 1.0;
        case Normalization::Monotone: return 2.0;
    }
    return 4.0 / 3.0;
}

const char* to_string(Normalization n) {
    switch (n) {
        case Normalization::Paper: return "paper";
        case Normalization::HilbertSchmidt: return "hs";
        case Normalization::Monotone: return "monotone";
    }
    return "paper";
}

Normalization parse_normalization(const std::string& name) {
    if (name == "paper") return Normalization::Paper;
    if (name == "hs") return Normalization::HilbertSchmidt;
    if (name == "monotone") return Normalization::Monotone;
    throw Error(ErrorKind::ParamOutOfRange, "unknown normalization '" + name + "'");
}

const char* to_string(Regime r) {
    switch (r) {
        case Regime::NotUseful: return "NotUseful";
        case Regime::BellSatisfiedUseful: return "BellSatisfiedUseful";
        case Regime::BellViolatingUseful: return "BellViolatingUseful";
    }
    return "NotUseful";
}

BlochForm bloch_decompose(const DensityMatrix& rho) {
    require_two_qubits(rho);
    const ComplexMatrix& m = rho.matrix();
    BlochForm form;
    for (int i = 1; i <= 3; ++i) {
        form.x[i - 1] = pauli_expectation(m, i, 0);
        form.y[i - 1] = pauli_expectation(m, 0, i);
        for (int j = 1; j <= 3; ++j) form.t[i - 1][j - 1] = pauli_expectation(m, i, j);
    }
    return form;
}

ComplexMatrix bloch_reconstruct(const BlochForm& form) {
    ComplexMatrix out = kron(pauli(0), pauli(0));
    for (int i = 1; i <= 3; ++i) {
        out += form.x[i - 1] * kron(pauli(i), pauli(0));
        out += form.y[i - 1] * kron(pauli(0), pauli(i));
        for (int j = 1; j <= 3; ++j) out += form.t[i - 1][j - 1] * kron(pauli(i), pauli(j));
    }
    out *= 0.25;
    return out;
}

Vec3 correlation_eigenvalues(const BlochForm& form) {
    const auto values = eigvalsh(to_matrix(t_t_transpose(form.t)));
    return {values[0], values[1], values[2]};
}

double geometric_discord(const DensityMatrix& rho, Normalization n) {
    return discord_from_form(bloch_decompose(rho), n);
}

DiscordBounds discord_bounds(const DensityMatrix& rho) {
    return measures_from_form(bloch_decompose(rho)).bounds;
}

double horodecki_m(const DensityMatrix& rho) {
    const Vec3 u = correlation_eigenvalues(bloch_decompose(rho));
    return u[2] + u[1];
}

double horodecki_u(const DensityMatrix& rho) {
    double total = 0.0;
    for (double ui : correlation_eigenvalues(bloch_decompose(rho))) total += std::sqrt(std::max(0.0, ui));
    return total;
}

double teleportation_fidelity(const DensityMatrix& rho) {
    return 0.5 * (1.0 + horodecki_u(rho) / 3.0);
}

double negativity2(const DensityMatrix& rho) {
    require_two_qubits(rho);
    const double n = trace_norm(partial_transpose(rho.matrix(), rho.dims(), Subsystem::A)) - 1.0;
    return std::max(0.0, n);
}

Regime classify_regime(const CorrelationReport& report, const Thresholds& thresholds) {
    if (report.m > thresholds.bell_m) return Regime::BellViolatingUseful;
    if (report.fidelity > thresholds.useful_fidelity) return Regime::BellSatisfiedUseful;
    return Regime::NotUseful;
}

TheoremAudit audit_theorems(const CorrelationReport& r, const Thresholds& th) {
    TheoremAudit audit;
    const double slack = th.audit_slack;
    const double useful_gain = 2.0 * r.fidelity - 1.0;

    audit.eq9_applicable = r.m <= th.bell_m && r.fidelity > th.useful_fidelity;
    if (audit.eq9_applicable) {
        const double lower = (3.0 * r.fidelity - 2.0) * (3.0 * r.fidelity - 2.0);
        audit.eq9_holds = lower <= r.d_g_max + slack && r.d_g_max <= th.critical_discord + slack;
    }

    audit.eq10_applicable = r.fidelity <= th.useful_fidelity;
    if (audit.eq10_applicable) {
        audit.eq10_holds = r.d_g_max >= -slack && r.d_g_max <= useful_gain + slack;
    }

    audit.eq11_applicable = r.m > th.bell_m;
    if (audit.eq11_applicable) {
        audit.eq11_holds = r.d_g_max > th.critical_discord - slack &&
                           r.d_g_max <= useful_gain + slack &&
                           r.fidelity > th.useful_fidelity;
    }
    return audit;
}

CorrelationReport full_report(const DensityMatrix& rho, const Thresholds& thresholds) {
    const BlochForm form = bloch_decompose(rho);
    const Measures m = measures_from_form(form);
    CorrelationReport report;
    report.d_g = m.d_g;
    report.d_g_min = m.bounds.min;
    report.d_g_max = m.bounds.max;
    report.m = m.m;
    report.u = m.u;
    report.fidelity = 0.5 * (1.0 + m.u / 3.0);
    report.negativity = negativity2(rho);
    report.regime = classify_regime(report, thresholds);
    return report;
}

}  // namespace qcorr
