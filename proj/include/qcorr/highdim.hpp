#pragma once

#include <string>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr {

enum class WitnessFamily { IsotropicWf, WernerWx };

const char* to_string(WitnessFamily family);
WitnessFamily parse_witness_family(const std::string& name);  // "wf" | "wx"

struct Witness {
    WitnessFamily family;
    std::size_t d;
    ComplexMatrix matrix;
};

/// W_f = I/d - |phi+><phi+|, or W_x = (|phi+><phi+|)^{T_A} = V/d.
Witness make_witness(WitnessFamily family, std::size_t d);

/// max(0, (f d - 1)/(d - 1)).
double isotropic_negativity(std::size_t d, double f);

/// (d f + 1)/(d + 1). Useful for teleportation iff above 2/(d+1).
double isotropic_fidelity(std::size_t d, double f);

/// (((d+1) F - 2)/(d - 1))^2; NotApplicable when F <= 2/(d+1).
double discord_lower_bound_fidelity(std::size_t d, double fidelity);

/// Tr(W rho).
double witness_expectation(const Witness& w, const DensityMatrix& rho);

/// (d/(d-1))^2 <W>^2; NotDetected unless <W> < 0.
double discord_lower_bound_witness_isotropic(std::size_t d, double expectation);

/// (2/(d-1))^2 <W>^2; NotDetected unless <W> < 0.
double discord_lower_bound_witness_werner(std::size_t d, double expectation);

/// max(0, (2/d)(2w - 1)/(d - 1)).
double werner_d_negativity(std::size_t d, double w);

/// Upper bound (1 + 2N)/d on the singlet fraction of werner_d(d, w).
struct SingletFractionBound {
    double value = 0.0;  // min(1, raw)
    double raw = 0.0;
    bool clipped = false;
};
SingletFractionBound singlet_fraction_bound_werner(std::size_t d, double w);

/// (||rho^{T_A}||_1 - 1)/(d - 1) for a d x d state; equals the two-qubit
/// negativity at d = 2.
double negativity_numeric(const DensityMatrix& rho);

/// Generalized Gell-Mann basis with the identity as element 0: symmetric,
/// antisymmetric then diagonal generators, Tr(g_i g_j) = 2 delta_ij for i,j > 0.
/// At d = 2 this is (I, X, Y, Z).
std::vector<ComplexMatrix> generalized_gell_mann(std::size_t d);
std::vector<std::string> generator_labels(std::size_t d);

struct GeneratorDecomposition {
    std::size_t d = 0;
    std::string basis;                     // "pauli", "gell-mann" or "generalized-gell-mann"
    std::vector<std::string> labels;       // one per generator
    std::vector<double> coefficients;      // c_ij at i * d^2 + j
    std::size_t nonzero_terms = 0;         // local measurement settings
    double residual = 0.0;                 // Frobenius reconstruction error

    double coefficient(std::size_t i, std::size_t j) const { return coefficients[i * labels.size() + j]; }
};

/// c_ij = Tr(W (g_i (x) g_j)) / (Tr(g_i^2) Tr(g_j^2)). DimensionTooLarge for d > 8.
GeneratorDecomposition decompose_local(const ComplexMatrix& op, std::size_t d);
GeneratorDecomposition witness_local_decomposition(const Witness& w);

ComplexMatrix reconstruct(const GeneratorDecomposition& decomposition);

}  // namespace qcorr
