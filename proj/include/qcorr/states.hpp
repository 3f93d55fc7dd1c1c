#pragma once

#include <filesystem>
#include <string>

#include "qcorr/linalg.hpp"

namespace qcorr {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdTol = 1e-10;

/// A validated bipartite state: Hermitian (within kHermitianTol, stored
/// exactly symmetrized), unit trace and positive semidefinite.
class DensityMatrix {
public:
    /// Throws InvariantViolation (detail "hermiticity", "trace" or "psd") or
    /// DimensionMismatch.
    DensityMatrix(Dims dims, const ComplexMatrix& matrix);

    Dims dims() const noexcept { return dims_; }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }
    std::size_t size() const noexcept { return matrix_.rows(); }

private:
    Dims dims_;
    ComplexMatrix matrix_;
};

// Named states. The product basis |ij> is ordered with A as the slow index.

/// p |psi-><psi-| + (1 - p) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix werner2(double p);
DensityMatrix singlet();
/// |+><+| (x) |+><+|, written in Pauli form as (I + X(x)I + I(x)X + X(x)X)/4.
DensityMatrix rho1();
DensityMatrix maximally_mixed(Dims dims);
/// Projector onto (1/sqrt(d)) sum_i |ii>.
DensityMatrix bell_phi_plus(std::size_t d);
/// (1-f)/(d^2-1) (I - |phi+><phi+|) + f |phi+><phi+|.
DensityMatrix isotropic(std::size_t d, double f);
/// (1-w) P_sym / dim(sym) + w P_anti / dim(anti); w is the weight on the
/// antisymmetric subspace.
DensityMatrix werner_d(std::size_t d, double w);

ComplexMatrix phi_plus_projector(std::size_t d);
/// V |ij> = |ji>.
ComplexMatrix swap_operator(std::size_t d);
ComplexMatrix antisymmetric_projector(std::size_t d);

/// State file: {"dims": [dA, dB], "matrix": [[{"re": r, "im": i}, ...], ...]}.
DensityMatrix parse_state(const std::string& text);
DensityMatrix load_state(const std::filesystem::path& path);
/// Full round-trip precision (shortest representation that re-parses exactly).
std::string serialize_state(const DensityMatrix& rho);
void save_state(const std::filesystem::path& path, const DensityMatrix& rho);

}  // namespace qcorr
