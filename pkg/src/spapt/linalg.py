"""Dense complex matrix helpers and the Hermitian eigensolver.

Everything here is agnostic of the quantum layers above; matrices are plain
``numpy.ndarray`` values of dtype complex128. The eigensolver is the cyclic
Jacobi kernel from :mod:`spapt.kernels`, adequate for the 8x8 working size
and the 64x64 operators built by :mod:`spapt.spa`.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .errors import NonSquare, NotHermitian, NumericalFailure

HERMITICITY_TOL = 1e-10


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product (dimensions multiply)."""
    return np.kron(np.asarray(a), np.asarray(b))


def hermiticity_defect(m: np.ndarray) -> float:
    """Largest entrywise deviation of ``m`` from its conjugate transpose."""
    m = np.asarray(m)
    return float(np.max(np.abs(m - dagger(m)))) if m.size else 0.0


def _check_hermitian(m: np.ndarray, tol: float) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquare(f"expected a square matrix, got shape {m.shape}")
    defect = hermiticity_defect(m)
    if not defect <= tol:
        raise NotHermitian(defect, tol)
    return (m + dagger(m)) / 2.0


def hermitian_eigenvalues(m: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """All eigenvalues of a Hermitian matrix, sorted ascending.

    ``tol`` bounds the accepted hermiticity defect; the input is symmetrized
    before the solve so the defect never biases the spectrum. The returned
    spectrum is verified against the first two trace moments (scaled by the
    second moment for large-norm inputs); a violation means the sweeps did
    not converge and raises :class:`NumericalFailure`.
    """
    h = _check_hermitian(m, tol)
    w = kernels.jacobi_eigvalsh(h)
    tr = float(np.trace(h).real)
    tr2 = float(np.trace(h @ h).real)
    bound = tol * max(1.0, abs(tr2))
    if abs(tr - w.sum()) > bound or abs(tr2 - (w ** 2).sum()) > bound:
        raise NumericalFailure(
            f"eigenvalue sweeps left trace residuals above {bound:.3e}"
        )
    return w


def min_eigenvalue(m: np.ndarray, tol: float = HERMITICITY_TOL) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(hermitian_eigenvalues(m, tol)[0])


def is_psd(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    """True when ``m`` is Hermitian (within ``tol``) with spectrum >= -tol."""
    return min_eigenvalue(m, tol) >= -tol
