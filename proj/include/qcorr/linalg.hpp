#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace qcorr {

using cplx = std::complex<double>;

/// Entry-wise Hermiticity tolerance. Inputs whose residual is within this bound
/// are symmetrized as (A + A^dagger)/2 before decomposition.
inline constexpr double kHermitianTol = 1e-12;

/// Dense row-major complex matrix. Small by construction (at most ~64x64).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const cplx> entries() const noexcept { return entries_; }
    std::span<cplx> entries() noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    cplx trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascending; column k
/// of `eigenvectors` belongs to eigenvalues[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    std::optional<ComplexMatrix> eigenvectors;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

/// max |A_ij - conj(A_ji)|. Throws NonSquare for rectangular input.
double hermitian_residual(const ComplexMatrix& a);

/// Cyclic complex Jacobi. Sweeps until the off-diagonal Frobenius norm drops
/// below 1e-13 (relative to max(1, ||A||_F)), capped at 100 sweeps.
Spectrum eig_hermitian(const ComplexMatrix& a, bool with_vectors = true);

/// Eigenvalues only, ascending.
std::vector<double> eigvalsh(const ComplexMatrix& a);

/// Tr(A A^dagger), the squared Hilbert-Schmidt norm.
double hs_norm_sq(const ComplexMatrix& a);

/// Frobenius norm of A - B.
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// Sum of |lambda_i| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a);

enum class Subsystem { A, B };

struct Dims {
    std::size_t a = 0;
    std::size_t b = 0;

    std::size_t total() const noexcept { return a * b; }
    friend bool operator==(const Dims&, const Dims&) = default;
};

/// Transpose on one tensor factor. Basis ordering is |ab> -> a*dB + b.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, Dims dims, Subsystem subsystem);

/// Trace out `subsystem`; the result lives on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix& rho, Dims dims, Subsystem subsystem);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// sigma_0 = I, sigma_1..3 = X, Y, Z.
ComplexMatrix pauli(int index);

/// Seedable generator shared by all samplers.
///
/// Uniforms come from std::mt19937_64 (fully specified by the C++ standard)
/// as (next() >> 11) * 2^-53. Normals use Box-Muller on two uniforms, with
/// the second variate cached for the next call. A complex normal takes one
/// normal for the real part and the next for the imaginary part.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();
    double normal();
    cplx complex_normal();
    /// Exponential(1), used for Dirichlet-uniform weights.
    double exponential();

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Stream-splitting helper: a deterministic seed for sub-stream `index`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// rho = G G^dagger / Tr(G G^dagger), G a (dA*dB) x rank Ginibre matrix.
ComplexMatrix random_density_matrix(std::size_t da, std::size_t db, std::size_t rank, Rng& rng);
ComplexMatrix random_density_matrix(std::size_t da, std::size_t db, std::size_t rank,
                                    std::uint64_t seed);

/// Convex mixture of K products of random single-qubit states with
/// Dirichlet-uniform weights. Always a 2x2 (4x4 matrix) separable state.
ComplexMatrix random_separable_state(std::size_t terms, Rng& rng);
ComplexMatrix random_separable_state(std::size_t terms, std::uint64_t seed);

/// Haar unitary via Gram-Schmidt on a Ginibre matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// (G + G^dagger)/2 with G Ginibre.
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);

}  // namespace qcorr
