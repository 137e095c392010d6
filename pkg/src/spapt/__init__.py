"""Detection and SLOCC classification of three-qubit entanglement through
structurally approximated partial transposition.

The pipeline: build a validated 8x8 density matrix (:mod:`spapt.states`),
partially transpose one qubit (:mod:`spapt.ptranspose`), mix with the
depolarizing output at the canonical weight 4/5 (:mod:`spapt.spa`), and
compare the three resulting minimum eigenvalues against 1/10
(:mod:`spapt.classify`). Pure genuine-entangled states split further into
GHZ and W classes by the three-tangle (:mod:`spapt.tangle`).
"""

from .classify import (
    BISEPARABLE,
    FULLY_SEPARABLE,
    GENUINE,
    SpectralSummary,
    Verdict,
    classify,
    classify_summary,
    cut_passes_threshold,
    decide_minima,
    spectral_summary,
)
from .kernels import BACKEND
from .linalg import dagger, hermitian_eigenvalues, is_psd, kron, min_eigenvalue
from .ptranspose import QUBITS, is_ppt_cut, partial_transpose, pt_min_eigenvalue
from .spa import (
    CANONICAL_WEIGHT,
    THRESHOLD,
    choi_matrix,
    min_choi_psd_parameter,
    min_cp_parameter,
    spa_bipartite_threshold,
    spa_element_map,
    spa_pt,
    spa_pt_canonical,
)
from .states import (
    StateSpec,
    as_density_matrix,
    catalog,
    catalog_names,
    convex_mix,
    density_from_pure,
    ket,
    parse_state_file,
    pure_amplitudes,
    pure_state,
    render_state_spec,
    to_density,
)
from .tangle import GHZ_CLASS, NOT_GENUINE, W_CLASS, pure_subclass, three_tangle_pure

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BISEPARABLE",
    "CANONICAL_WEIGHT",
    "FULLY_SEPARABLE",
    "GENUINE",
    "GHZ_CLASS",
    "NOT_GENUINE",
    "QUBITS",
    "SpectralSummary",
    "StateSpec",
    "THRESHOLD",
    "Verdict",
    "W_CLASS",
    "as_density_matrix",
    "catalog",
    "catalog_names",
    "choi_matrix",
    "classify",
    "classify_summary",
    "convex_mix",
    "cut_passes_threshold",
    "dagger",
    "decide_minima",
    "density_from_pure",
    "hermitian_eigenvalues",
    "is_ppt_cut",
    "is_psd",
    "ket",
    "kron",
    "min_choi_psd_parameter",
    "min_cp_parameter",
    "min_eigenvalue",
    "parse_state_file",
    "partial_transpose",
    "pt_min_eigenvalue",
    "pure_amplitudes",
    "pure_state",
    "pure_subclass",
    "render_state_spec",
    "spa_bipartite_threshold",
    "spa_element_map",
    "spa_pt",
    "spa_pt_canonical",
    "spectral_summary",
    "three_tangle_pure",
    "to_density",
]
