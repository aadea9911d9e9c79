"""Minimal dense linear-algebra kernel.

Vectors are 1-d and matrices 2-d NumPy arrays (float64 or complex128).
Everything downstream needs lives here: a Hermitian eigensolver, repeated
matrix application, and the row-sum norm. The eigensolver is cyclic Jacobi
(robust and adequate at the dimensions this package works with, at most a
few hundred); see ``framekit.backend`` for the compiled/pure split.
"""

from __future__ import annotations

import numpy as np

from framekit.backend import kernels
from framekit.errors import DimMismatchError, NotHermitianError, NotSquareError

#: relative tolerance for the Hermitian symmetry precondition
HERMITIAN_TOL = 1e-10
#: threshold below which a vector/matrix entry counts as exactly zero when
#: choosing a deterministic phase convention
PHASE_EPS = 1e-8


def frobenius(m) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(np.asarray(m)))


def hermitian_eig(m, tol: float = HERMITIAN_TOL):
    """Eigendecomposition of a Hermitian matrix.

    Parameters
    ----------
    m : (d, d) array_like
        Hermitian within ``tol`` relative Frobenius deviation.
    tol : float
        Symmetry tolerance; the matrix is symmetrized before iterating.

    Returns
    -------
    w : (d,) ndarray
        Real eigenvalues in ascending order.
    v : (d, d) ndarray
        Orthonormal eigenvector columns, ``m @ v[:, k] == w[k] * v[:, k]``.
        Each column carries a deterministic phase: its first entry larger
        than ``PHASE_EPS`` times the column maximum is real positive.
    """
    a = np.asarray(m)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {a.shape}")
    scale = frobenius(a)
    dev = frobenius(a - a.conj().T)
    if dev > tol * max(scale, 1e-300):
        raise NotHermitianError(
            f"matrix is not Hermitian: relative deviation {dev / max(scale, 1e-300):.3e}"
        )
    dtype = np.complex128 if np.iscomplexobj(a) else np.float64
    h = np.asarray(0.5 * (a + a.conj().T), dtype=dtype)
    w, v = kernels.jacobi_eigh(h)
    order = np.argsort(w, kind="stable")
    return w[order], _canonical_columns(v[:, order])


def _canonical_columns(v):
    v = np.array(v)
    for k in range(v.shape[1]):
        col = v[:, k]
        mags = np.abs(col)
        top = mags.max()
        if top == 0.0:
            continue
        idx = int(np.argmax(mags > PHASE_EPS * top))
        pivot = col[idx]
        if np.iscomplexobj(v):
            v[:, k] = col * (np.conj(pivot) / abs(pivot))
        elif pivot < 0:
            v[:, k] = -col
    return v


def mat_apply_pow(m, v, k: int):
    """Apply ``m`` to ``v`` exactly ``k`` times (no explicit matrix power)."""
    a = np.asarray(m)
    x = np.asarray(v)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSquareError(f"expected a square matrix, got shape {a.shape}")
    if x.shape != (a.shape[1],):
        raise DimMismatchError(f"vector shape {x.shape} does not match matrix {a.shape}")
    if k < 0:
        raise ValueError("power must be nonnegative")
    out = x.astype(np.result_type(a, x), copy=True)
    for _ in range(int(k)):
        out = a @ out
    return out


def inf_norm(m) -> float:
    """Row-sum induced norm: max over rows of the sum of entry magnitudes."""
    a = np.atleast_2d(np.asarray(m))
    return float(np.abs(a).sum(axis=1).max())
