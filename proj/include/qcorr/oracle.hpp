#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qcorr/correlations.hpp"

namespace qcorr {

/// A point of the zero-discord set with A as the classical side:
///   chi = p1 |psi1><psi1| (x) rho(r1) + (1 - p1) |psi2><psi2| (x) rho(r2)
/// where |psi1> = (cos(theta/2), e^{i phi} sin(theta/2)), |psi2> its
/// orthogonal complement and rho(r) = (I + r.sigma)/2.
struct ClassicalQuantumState {
    double theta = 0.0;
    double phi = 0.0;
    double p1 = 1.0;
    Vec3 r1{};
    Vec3 r2{};

    ComplexMatrix assemble() const;
};

struct OracleResult {
    double value = 0.0;
    ClassicalQuantumState best_params;
    int restarts_used = 0;
    bool converged = false;
};

struct OracleOptions {
    Normalization normalization = Normalization::Paper;
    int restarts = 64;
    std::uint64_t seed = 0;
    int max_iterations = 2000;
    double simplex_tol = 1e-10;
};

/// Multi-restart Nelder-Mead minimization of ||rho - chi||^2 over the
/// classical-quantum parameterization, scaled by the normalization. Restart k
/// draws its start from derive_seed(seed, k), so a run with more restarts
/// always contains the starts of a run with fewer.
OracleResult discord_bruteforce(const DensityMatrix& rho, const OracleOptions& options);

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Plain Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
/// Converged when the spread of simplex values drops to `tol`.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, double step, double tol,
                             int max_iterations);

struct WeylReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::size_t violations = 0;
    /// Smallest margin over all checked inequalities (negative means violated).
    double worst_margin = 0.0;
};

/// Checks lambda_k(X) + lambda_1(Y) <= lambda_k(X+Y) <= lambda_k(X) + lambda_n(Y)
/// for every k, within `slack`. Updates `report`.
void check_weyl(const ComplexMatrix& x, const ComplexMatrix& y, double slack, WeylReport& report);

/// Draws `samples` random Hermitian pairs of size n (2 <= n <= 8).
WeylReport weyl_property_driver(std::size_t n, std::size_t samples, std::uint64_t seed,
                                double slack = 1e-10);

}  // namespace qcorr
