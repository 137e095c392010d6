"""Structural physical approximation of single-qubit partial transposition.

The approximated channel mixes the fully depolarizing output with the partial
transpose:

    output(rho) = (p/8) * I  +  (1 - p) * PT_q(rho)

Because the identity commutes with everything, the output spectrum is the
affine image ``p/8 + (1-p) * mu`` of the partial-transpose spectrum. At the
canonical weight ``p = 4/5`` the PPT test "PT_q(rho) is PSD" becomes
"min eigenvalue of the channel output >= 1/10", which is the threshold used
by :mod:`spapt.classify`.

Two different weights matter and are deliberately kept apart:

* :func:`min_cp_parameter` returns the smallest weight at which the channel
  output is PSD for every three-qubit input state (worst case over inputs).
  That weight is 4/5 and it is what fixes the 1/10 threshold.
* :func:`min_choi_psd_parameter` returns the smallest weight at which the
  channel's Choi operator is PSD, i.e. the channel extends positively to
  entangled inputs on a doubled system. That weight is larger (32/33), so
  outputs on ordinary inputs being PSD from 4/5 on does not by itself make
  the mixed map completely positive there.
"""

from __future__ import annotations

import numpy as np

from .linalg import min_eigenvalue
from .errors import ParamOutOfRange
from .ptranspose import partial_transpose, qubit_index, transpose_bits

CANONICAL_WEIGHT = 4.0 / 5.0
THRESHOLD = CANONICAL_WEIGHT / 8.0  # 1/10
PSD_TOL = 1e-10
BISECTION_ITERS = 60


def _check_weight(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParamOutOfRange(f"mixing weight p={p!r} outside [0, 1]")
    return p


def spa_pt(rho: np.ndarray, q: str, p: float) -> np.ndarray:
    """Channel output ``(p/8) I + (1-p) PT_q(rho)``."""
    p = _check_weight(p)
    return (p / 8.0) * np.eye(8, dtype=np.complex128) + (1.0 - p) * partial_transpose(rho, q)


def spa_pt_canonical(rho: np.ndarray, q: str) -> np.ndarray:
    """Channel output at the canonical weight 4/5 (PSD for every valid input)."""
    return spa_pt(rho, q, CANONICAL_WEIGHT)


def spa_element_map(rho: np.ndarray) -> np.ndarray:
    """Canonical qubit-A output assembled entry by entry.

    Writes each upper-triangle entry of the output directly from the input
    entries (diagonal gets 1/10 + t/5, the a=0/a'=1 corner pulls conjugated
    entries from the mirrored positions, everything else is t/5), then fills
    the lower triangle by Hermiticity. Must agree with
    ``spa_pt_canonical(rho, 'A')`` entrywise; the two routes cross-check the
    transposition indexing.
    """
    t = np.asarray(rho, dtype=np.complex128)
    if t.shape != (8, 8):
        raise ValueError(f"expected an 8x8 matrix, got {t.shape}")
    out = np.zeros((8, 8), dtype=np.complex128)
    for i in range(8):
        out[i, i] = 1.0 / 10.0 + t[i, i] / 5.0
    for i in range(8):
        for j in range(i + 1, 8):
            if i < 4 and j >= 4:
                out[i, j] = np.conj(t[j - 4, i + 4]) / 5.0
            else:
                out[i, j] = t[i, j] / 5.0
    for i in range(8):
        for j in range(i):
            out[i, j] = np.conj(out[j, i])
    return out


def choi_matrix(q: str, p: float) -> np.ndarray:
    """Choi operator of the channel at weight ``p``.

    Applies the channel to the second half of the maximally entangled
     8 x 8 pair state (amplitudes 1/sqrt(8)), giving a Hermitian unit-trace
    64x64 operator whose spectrum decides complete positivity.
    """
    p = _check_weight(p)
    bit = qubit_index(q)
    psi = np.eye(8, dtype=np.complex128).reshape(-1) / np.sqrt(8.0)
    phi = np.outer(psi, psi.conj())
    pt_choi = transpose_bits(phi, 6, 3 + bit)
    return p * np.eye(64, dtype=np.complex128) / 64.0 + (1.0 - p) * pt_choi


def choi_min_eigenvalue(q: str, p: float) -> float:
    return min_eigenvalue(choi_matrix(q, p))


def _seesaw_worst_pt_min(bit: int, restarts: int = 12, iters: int = 400) -> float:
    """Most negative reachable eigenvalue of PT over all input states.

    Minimizes <phi| PT(|psi><psi|) |phi| by alternating exact eigenvector
    steps in psi and phi (each step is optimal for the other held fixed, so
    the value decreases monotonically). Convexity puts the worst case on
    pure inputs. Uses numpy's eigensolver internally because the steps need
    eigenvectors, which the Jacobi kernel does not expose.
    """
    rng = np.random.default_rng(20240800 + bit)
    best = 0.0
    for _ in range(restarts):
        psi = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        psi /= np.linalg.norm(psi)
        prev = np.inf
        val = 0.0
        for _ in range(iters):
            rho = np.outer(psi, psi.conj())
            w, v = np.linalg.eigh(transpose_bits(rho, 3, bit))
            val = float(w[0])
            phi = v[:, 0]
            w2, v2 = np.linalg.eigh(
                transpose_bits(np.outer(phi, phi.conj()), 3, bit)
            )
            psi = v2[:, 0]
            if abs(val - prev) < 1e-15:
                break
            prev = val
        best = min(best, val)
    return best


_WORST_PT_MIN: dict[int, float] = {}


def worst_case_pt_min(q: str) -> float:
    """Cached seesaw estimate of the most negative PT eigenvalue for cut ``q``."""
    bit = qubit_index(q)
    if bit not in _WORST_PT_MIN:
        _WORST_PT_MIN[bit] = _seesaw_worst_pt_min(bit)
    return _WORST_PT_MIN[bit]


def min_cp_parameter(q: str, tol: float = 1e-6) -> float:
    """Smallest weight at which every input state yields a PSD output.

    The worst-case output eigenvalue at weight ``p`` is
    ``p/8 + (1-p) * worst_case_pt_min(q)`` by the affine spectrum law, so a
    bisection on that predicate (PSD within ``PSD_TOL``) pins the boundary.
    The returned value is 4/5 up to ``tol``.
    """
    if not tol > 0.0:
        raise ParamOutOfRange(f"tol={tol!r} must be positive")
    worst = worst_case_pt_min(q)

    def output_psd(p: float) -> bool:
        return p / 8.0 + (1.0 - p) * worst >= -PSD_TOL

    lo, hi = 0.0, 1.0
    if output_psd(lo):
        return lo
    for _ in range(BISECTION_ITERS):
        mid = 0.5 * (lo + hi)
        if output_psd(mid):
            hi = mid
        else:
            lo = mid
    return hi


def min_choi_psd_parameter(q: str, tol: float = 1e-6) -> float:
    """Smallest weight at which the Choi operator itself is PSD (about 32/33)."""
    if not tol > 0.0:
        raise ParamOutOfRange(f"tol={tol!r} must be positive")
    lo, hi = 0.0, 1.0
    if choi_min_eigenvalue(q, lo) >= -PSD_TOL:
        return lo
    while hi - lo > tol / 4.0:
        mid = 0.5 * (lo + hi)
        if choi_min_eigenvalue(q, mid) >= -PSD_TOL:
            hi = mid
        else:
            lo = mid
    return hi


def spa_bipartite_threshold(d: int, lam: float) -> float:
    """Detection threshold ``d^2 lam / (d^4 lam + 1)`` for a d x d system.

    ``lam`` is the magnitude of the most negative eigenvalue produced by the
    induced transposition map on the maximally entangled pair state.
    """
    d = int(d)
    if d < 2:
        raise ParamOutOfRange(f"local dimension d={d!r} must be >= 2")
    lam = float(lam)
    if not lam > 0.0:
        raise ParamOutOfRange(f"lam={lam!r} must be positive")
    return d * d * lam / (d ** 4 * lam + 1.0)
