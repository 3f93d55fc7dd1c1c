#include "qcorr/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "qcorr/error.hpp"

namespace qcorr {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonHermitian: return "NonHermitian";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::BadRank: return "BadRank";
        case ErrorKind::BadDimension: return "BadDimension";
        case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
        case ErrorKind::WrongDims: return "WrongDims";
        case ErrorKind::InvariantViolation: return "InvariantViolation";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NotApplicable: return "NotApplicable";
        case ErrorKind::NotDetected: return "NotDetected";
        case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
        case ErrorKind::NegativeTime: return "NegativeTime";
        case ErrorKind::BadSteps: return "BadSteps";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum of different shapes");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference of different shapes");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (auto& e : entries_) e *= scale;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product with incompatible shapes");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const cplx a = lhs(i, k);
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Eigensolver

double hermitian_residual(const ComplexMatrix& a) {
    if (!a.is_square()) throw Error(ErrorKind::NonSquare, "expected a square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            worst = std::max(worst, std::abs(a(i, j) - std::conj(a(j, i))));
    return worst;
}

namespace {

ComplexMatrix symmetrized(const ComplexMatrix& a) {
    const double residual = hermitian_residual(a);
    if (residual > kHermitianTol) {
        throw Error(ErrorKind::NonHermitian,
                    "symmetry residual " + std::to_string(residual) + " exceeds tolerance");
    }
    ComplexMatrix h(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        h(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

// Lexicographic comparison of two eigenvector columns, real part first.
bool column_less(const ComplexMatrix& v, std::size_t c1, std::size_t c2) {
    for (std::size_t r = 0; r < v.rows(); ++r) {
        const cplx x = v(r, c1), y = v(r, c2);
        if (x.real() != y.real()) return x.real() < y.real();
        if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
}

constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 100;

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& input, bool with_vectors) {
    ComplexMatrix a = symmetrized(input);
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, std::sqrt(hs_norm_sq(a)));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kOffDiagonalTol * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // Phase the (p,q) block to real symmetric form, then apply the
                // classic real rotation that annihilates the off-diagonal entry.
                const cplx phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const cplx gpp = c;
                const cplx gpq = s;
                const cplx gqp = -s * std::conj(phase);
                const cplx gqq = c * std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (with_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = vkp * gpp + vkq * gqp;
                        v(k, q) = vkp * gpq + vkq * gqq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const double li = a(i, i).real(), lj = a(j, j).real();
        if (li != lj) return li < lj;
        return with_vectors && column_less(v, i, j);
    });

    Spectrum out;
    out.eigenvalues.reserve(n);
    for (std::size_t k : order) out.eigenvalues.push_back(a(k, k).real());
    if (with_vectors) {
        ComplexMatrix sorted(n, n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) sorted(r, c) = v(r, order[c]);
        out.eigenvectors = std::move(sorted);
    }
    return out;
}

std::vector<double> eigvalsh(const ComplexMatrix& a) {
    return eig_hermitian(a, false).eigenvalues;
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& e : a.entries()) s += std::norm(e);
    return s;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return std::sqrt(hs_norm_sq(a - b));
}

double trace_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (double lambda : eigvalsh(a)) s += std::abs(lambda);
    return s;
}

// ---------------------------------------------------------------------------
// Tensor structure

namespace {

void check_bipartite(const ComplexMatrix& rho, Dims dims) {
    if (dims.a == 0 || dims.b == 0 || rho.rows() != dims.total() || rho.cols() != dims.total()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "matrix is not of size dA*dB = " + std::to_string(dims.total()));
    }
}

}  // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims, Subsystem subsystem) {
    check_bipartite(rho, dims);
    ComplexMatrix out(rho.rows(), rho.cols());
    for (std::size_t a = 0; a < dims.a; ++a)
        for (std::size_t b = 0; b < dims.b; ++b)
            for (std::size_t a2 = 0; a2 < dims.a; ++a2)
                for (std::size_t b2 = 0; b2 < dims.b; ++b2) {
                    const std::size_t row = a * dims.b + b;
                    const std::size_t col = a2 * dims.b + b2;
                    const std::size_t src_row =
                        subsystem == Subsystem::A ? a2 * dims.b + b : a * dims.b + b2;
                    const std::size_t src_col =
                        subsystem == Subsystem::A ? a * dims.b + b2 : a2 * dims.b + b;
                    out(row, col) = rho(src_row, src_col);
                }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, Dims dims, Subsystem subsystem) {
    check_bipartite(rho, dims);
    if (subsystem == Subsystem::B) {
        ComplexMatrix out(dims.a, dims.a);
        for (std::size_t a = 0; a < dims.a; ++a)
            for (std::size_t a2 = 0; a2 < dims.a; ++a2)
                for (std::size_t b = 0; b < dims.b; ++b)
                    out(a, a2) += rho(a * dims.b + b, a2 * dims.b + b);
        return out;
    }
    ComplexMatrix out(dims.b, dims.b);
    for (std::size_t b = 0; b < dims.b; ++b)
        for (std::size_t b2 = 0; b2 < dims.b; ++b2)
            for (std::size_t a = 0; a < dims.a; ++a)
                out(b, b2) += rho(a * dims.b + b, a * dims.b + b2);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

ComplexMatrix pauli(int index) {
    using namespace std::complex_literals;
    switch (index) {
        case 0: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0});
        case 1: return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0});
        case 2: return ComplexMatrix(2, 2, {0.0, -1.0i, 1.0i, 0.0});
        case 3: return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0});
        default: throw Error(ErrorKind::ParamOutOfRange, "Pauli index must be 0..3");
    }
}

// ---------------------------------------------------------------------------
// Sampling

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(angle);
    return r * std::cos(angle);
}

cplx Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

double Rng::exponential() { return -std::log(1.0 - uniform()); }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over a golden-ratio stride
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

ComplexMatrix random_density_matrix(std::size_t da, std::size_t db, std::size_t rank, Rng& rng) {
    const std::size_t n = da * db;
    if (n == 0) throw Error(ErrorKind::BadDimension, "dimensions must be positive");
    if (rank < 1 || rank > n) {
        throw Error(ErrorKind::BadRank, "rank must lie in [1, dA*dB]");
    }
    ComplexMatrix g(n, rank);
    for (auto& e : g.entries()) e = rng.complex_normal();
    ComplexMatrix rho = g * g.adjoint();
    const double tr = rho.trace().real();
    rho *= 1.0 / tr;
    // exact Hermiticity on the stored entries
    for (std::size_t i = 0; i < n; ++i) {
        rho(i, i) = rho(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) rho(j, i) = std::conj(rho(i, j));
    }
    return rho;
}

ComplexMatrix random_density_matrix(std::size_t da, std::size_t db, std::size_t rank,
                                    std::uint64_t seed) {
    Rng rng(seed);
    return random_density_matrix(da, db, rank, rng);
}

ComplexMatrix random_separable_state(std::size_t terms, Rng& rng) {
    if (terms < 1) throw Error(ErrorKind::ParamOutOfRange, "need at least one mixture term");
    std::vector<double> weights(terms);
    for (auto& w : weights) w = rng.exponential();
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

    ComplexMatrix rho(4, 4);
    for (std::size_t k = 0; k < terms; ++k) {
        const std::size_t rank_a = rng.uniform() < 0.5 ? 1 : 2;
        const std::size_t rank_b = rng.uniform() < 0.5 ? 1 : 2;
        const ComplexMatrix ra = random_density_matrix(2, 1, rank_a, rng);
        const ComplexMatrix rb = random_density_matrix(2, 1, rank_b, rng);
        rho += (weights[k] / total) * kron(ra, rb);
    }
    return rho;
}

ComplexMatrix random_separable_state(std::size_t terms, std::uint64_t seed) {
    Rng rng(seed);
    return random_separable_state(terms, rng);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix q(n, n);
    for (auto& e : q.entries()) e = rng.complex_normal();
    // modified Gram-Schmidt on columns
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t prev = 0; prev < c; ++prev) {
            cplx overlap = 0.0;
            for (std::size_t r = 0; r < n; ++r) overlap += std::conj(q(r, prev)) * q(r, c);
            for (std::size_t r = 0; r < n; ++r) q(r, c) -= overlap * q(r, prev);
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, c));
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) q(r, c) /= norm;
    }
    return q;
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    ComplexMatrix g(n, n);
    for (auto& e : g.entries()) e = rng.complex_normal();
    ComplexMatrix h = 0.5 * (g + g.adjoint());
    for (std::size_t i = 0; i < n; ++i) h(i, i) = h(i, i).real();
    return h;
}

}  // namespace qcorr
