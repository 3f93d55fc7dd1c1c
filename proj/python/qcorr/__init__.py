"""Bipartite quantum correlations: geometric discord, Bell-CHSH, teleportation
fidelity, negativity and entanglement-witness bounds.

Density matrices are complex numpy arrays. Two-qubit functions expect 4x4
input; d x d helpers infer the split from the matrix size unless ``dims`` is
given.
"""

from ._qcorr import (
    QcorrError,
    bell_phi_plus,
    bloch_decompose,
    discord_bounds,
    discord_bruteforce,
    eigvalsh,
    full_report,
    geometric_discord,
    horodecki_m,
    isotropic,
    isotropic_report,
    load_state,
    maximally_mixed,
    negativity,
    partial_transpose,
    random_density_matrix,
    rho1,
    save_state,
    singlet,
    teleportation_fidelity,
    validate,
    werner2,
    werner_d,
    werner_d_report,
    werner_decay_trajectory,
    weyl_violations,
    witness_plan,
)

__all__ = [name for name in dir() if not name.startswith("_")]
