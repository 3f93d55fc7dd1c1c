#include "qcorr/highdim.hpp"

#include <cmath>

#include "qcorr/error.hpp"

namespace qcorr {

namespace {

void check_dimension(std::size_t d) {
    if (d < 2) throw Error(ErrorKind::BadDimension, "local dimension must be at least 2");
}

void check_unit_interval(double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, std::string(name) + " must lie in [0, 1]");
    }
}

// Tr(A B) for square matrices of equal size.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, i);
    return s;
}

// Tr(op (gi (x) gj)) without forming the Kronecker product.
cplx local_overlap(const ComplexMatrix& op, const ComplexMatrix& gi, const ComplexMatrix& gj, std::size_t d) {
    cplx s = 0.0;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t a2 = 0; a2 < d; ++a2) {
            const cplx ga = gi(a2, a);
            if (ga == cplx{}) continue;
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t b2 = 0; b2 < d; ++b2) {
                    const cplx gb = gj(b2, b);
                    if (gb == cplx{}) continue;
                    s += op(a * d + b, a2 * d + b2) * ga * gb;
                }
        }
    return s;
}

constexpr double kNonzero = 1e-12;
constexpr std::size_t kMaxDecompositionDim = 8;

}  // namespace

const char* to_string(WitnessFamily family) {
    return family == WitnessFamily::IsotropicWf ? "wf" : "wx";
}

WitnessFamily parse_witness_family(const std::string& name) {
    if (name == "wf") return WitnessFamily::IsotropicWf;
    if (name == "wx") return WitnessFamily::WernerWx;
    throw Error(ErrorKind::ParamOutOfRange, "unknown witness family '" + name + "'");
}

Witness make_witness(WitnessFamily family, std::size_t d) {
    check_dimension(d);
    const double inv_d = 1.0 / static_cast<double>(d);
    if (family == WitnessFamily::IsotropicWf) {
        ComplexMatrix m = ComplexMatrix::identity(d * d);
        m *= inv_d;
        m -= phi_plus_projector(d);
        return {family, d, std::move(m)};
    }
    ComplexMatrix m = partial_transpose(phi_plus_projector(d), {d, d}, Subsystem::A);
    return {family, d, std::move(m)};
}

double isotropic_negativity(std::size_t d, double f) {
    check_dimension(d);
    check_unit_interval(f, "f");
    const double dd = static_cast<double>(d);
    return std::max(0.0, (f * dd - 1.0) / (dd - 1.0));
}

double isotropic_fidelity(std::size_t d, double f) {
    check_dimension(d);
    check_unit_interval(f, "f");
    const double dd = static_cast<double>(d);
    return (dd * f + 1.0) / (dd + 1.0);
}

double discord_lower_bound_fidelity(std::size_t d, double fidelity) {
    check_dimension(d);
    const double dd = static_cast<double>(d);
    if (!(fidelity > 2.0 / (dd + 1.0))) {
        throw Error(ErrorKind::NotApplicable, "fidelity does not exceed the classical limit 2/(d+1)");
    }
    const double base = ((dd + 1.0) * fidelity - 2.0) / (dd - 1.0);
    return base * base;
}

double witness_expectation(const Witness& w, const DensityMatrix& rho) {
    if (rho.size() != w.matrix.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "witness and state sizes differ");
    }
    return trace_product(w.matrix, rho.matrix()).real();
}

double discord_lower_bound_witness_isotropic(std::size_t d, double expectation) {
    check_dimension(d);
    if (!(expectation < 0.0)) throw Error(ErrorKind::NotDetected, "witness expectation is not negative");
    const double ratio = static_cast<double>(d) / (static_cast<double>(d) - 1.0);
    return ratio * ratio * expectation * expectation;
}

double discord_lower_bound_witness_werner(std::size_t d, double expectation) {
    check_dimension(d);
    if (!(expectation < 0.0)) throw Error(ErrorKind::NotDetected, "witness expectation is not negative");
    const double ratio = 2.0 / (static_cast<double>(d) - 1.0);
    return ratio * ratio * expectation * expectation;
}

double werner_d_negativity(std::size_t d, double w) {
    check_dimension(d);
    check_unit_interval(w, "w");
    const double dd = static_cast<double>(d);
    return std::max(0.0, (2.0 / dd) * (2.0 * w - 1.0) / (dd - 1.0));
}

SingletFractionBound singlet_fraction_bound_werner(std::size_t d, double w) {
    const double n = werner_d_negativity(d, w);
    SingletFractionBound out;
    out.raw = (1.0 + 2.0 * n) / static_cast<double>(d);
    out.clipped = out.raw > 1.0;
    out.value = std::min(1.0, out.raw);
    return out;
}

double negativity_numeric(const DensityMatrix& rho) {
    const Dims dims = rho.dims();
    if (dims.a != dims.b) throw Error(ErrorKind::DimensionMismatch, "negativity normalization needs dA = dB");
    if (dims.a < 2) throw Error(ErrorKind::BadDimension, "local dimension must be at least 2");
    const double excess = trace_norm(partial_transpose(rho.matrix(), dims, Subsystem::A)) - 1.0;
    return std::max(0.0, excess / (static_cast<double>(dims.a) - 1.0));
}

std::vector<ComplexMatrix> generalized_gell_mann(std::size_t d) {
    check_dimension(d);
    using namespace std::complex_literals;
    std::vector<ComplexMatrix> basis;
    basis.reserve(d * d);
    basis.push_back(ComplexMatrix::identity(d));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix g(d, d);
            g(j, k) = 1.0;
            g(k, j) = 1.0;
            basis.push_back(std::move(g));
        }
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix g(d, d);
            g(j, k) = -1.0i;
            g(k, j) = 1.0i;
            basis.push_back(std::move(g));
        }
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix g(d, d);
        const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) g(j, j) = scale;
        g(l, l) = -scale * static_cast<double>(l);
        basis.push_back(std::move(g));
    }
    return basis;
}

std::vector<std::string> generator_labels(std::size_t d) {
    check_dimension(d);
    if (d == 2) return {"I", "X", "Y", "Z"};
    std::vector<std::string> labels{"I"};
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) labels.push_back("S" + std::to_string(j) + std::to_string(k));
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = j + 1; k < d; ++k) labels.push_back("A" + std::to_string(j) + std::to_string(k));
    for (std::size_t l = 1; l < d; ++l) labels.push_back("D" + std::to_string(l));
    return labels;
}

GeneratorDecomposition decompose_local(const ComplexMatrix& op, std::size_t d) {
    check_dimension(d);
    if (d > kMaxDecompositionDim) {
        throw Error(ErrorKind::DimensionTooLarge, "local decomposition supports d <= 8");
    }
    if (op.rows() != d * d || op.cols() != d * d) {
        throw Error(ErrorKind::DimensionMismatch, "operator is not d^2 x d^2");
    }
    const auto basis = generalized_gell_mann(d);
    const std::size_t count = basis.size();

    GeneratorDecomposition out;
    out.d = d;
    out.basis = d == 2 ? "pauli" : d == 3 ? "gell-mann" : "generalized-gell-mann";
    out.labels = generator_labels(d);
    out.coefficients.assign(count * count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const double ni = trace_product(basis[i], basis[i]).real();
        for (std::size_t j = 0; j < count; ++j) {
            const double nj = trace_product(basis[j], basis[j]).real();
            const double c = local_overlap(op, basis[i], basis[j], d).real() / (ni * nj);
            out.coefficients[i * count + j] = c;
            if (std::abs(c) > kNonzero) ++out.nonzero_terms;
        }
    }
    out.residual = frobenius_distance(reconstruct(out), op);
    return out;
}

GeneratorDecomposition witness_local_decomposition(const Witness& w) {
    return decompose_local(w.matrix, w.d);
}

ComplexMatrix reconstruct(const GeneratorDecomposition& decomposition) {
    const auto basis = generalized_gell_mann(decomposition.d);
    const std::size_t count = basis.size();
    const std::size_t n = decomposition.d * decomposition.d;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            const double c = decomposition.coefficients[i * count + j];
            if (c != 0.0) out += c * kron(basis[i], basis[j]);
        }
    return out;
}

}  // namespace qcorr
