"""Frame quantization of discrete-variable observables.

A real function f on the M-point set indexed by a normalized Parseval
frame becomes the Hermitian operator A_f = sum_i k_i f(a_i) |u_i><u_i|,
materialized in the orthonormal basis the unit vectors are expressed in.
The lower symbol is the diagonal <u_k|A_f|u_k>, which equals the
row-stochastic matrix P = U K applied to f, so iterating the lower symbol
walks the observable toward its classical average.

Four concrete frame families come with closed-form cross-checks: the
DFT-subspace frame on Z_M (with geometric/binomial/ramp matrix elements
and Gaussian-Hermite DFT eigenfunctions), the coherent frame generated by
shift and modulation operators on Z_n x Z_n, the four-site cluster frame
of the periodic tight-binding crystal on Z_N x Z_N, and the simplex frame
overcomplete by one vector.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import comb

import numpy as np

from framekit import numlin
from framekit.errors import BadDimsError, DimMismatchError, IndexRangeError, NotUnitError
from framekit.frames import NormalizedFrame, stochastic_profile


def _check_observable(nf: NormalizedFrame, f) -> np.ndarray:
    arr = np.asarray(f)
    if np.iscomplexobj(arr):
        raise ValueError("observables must be real-valued")
    arr = arr.astype(np.float64)
    if arr.shape != (nf.M,):
        raise DimMismatchError(f"observable must have {nf.M} values, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class QuantizationResult:
    """Operator, lower symbol, quantum spectrum and classical average."""

    operator: np.ndarray
    lower_symbol: np.ndarray
    spectrum: np.ndarray
    classical_avg: float

    def to_dict(self) -> dict:
        complex_op = np.iscomplexobj(self.operator)
        if complex_op:
            a = [[[float(z.real), float(z.imag)] for z in row] for row in self.operator]
        else:
            a = [[float(x) for x in row] for row in self.operator]
        return {
            "A": a,
            "lower_symbol": [float(x) for x in self.lower_symbol],
            "spectrum": [float(x) for x in self.spectrum],
            "classical_avg": float(self.classical_avg),
        }


def quantize(nf: NormalizedFrame, f) -> QuantizationResult:
    """A_f = sum_i k_i f(a_i) |u_i><u_i| with its symbol and spectrum."""
    vals = _check_observable(nf, f)
    u = nf.unit_vectors
    weighted = (nf.weights * vals)[:, None] * u.conj()
    op = u.T @ weighted
    lower = np.einsum("ij,jk,ik->i", u.conj(), op, u)
    spectrum, _ = numlin.hermitian_eig(op)
    return QuantizationResult(
        operator=op,
        lower_symbol=lower.real,
        spectrum=spectrum,
        classical_avg=float(nf.weights @ vals / nf.N),
    )


def lower_symbol_identity_residual(nf: NormalizedFrame, f) -> float:
    """Max deviation between <u_k|A_f|u_k> and (P f)(k); an algebraic identity."""
    vals = _check_observable(nf, f)
    direct = quantize(nf, f).lower_symbol
    via_p = stochastic_profile(nf).P @ vals
    return float(np.max(np.abs(direct - via_p)))


def iterate_lower_symbol(nf: NormalizedFrame, f, k: int) -> np.ndarray:
    """P^k f: the k-times-iterated lower symbol."""
    vals = _check_observable(nf, f)
    if k < 1:
        raise ValueError("iteration count must be >= 1")
    return numlin.mat_apply_pow(stochastic_profile(nf).P, vals, k)


@dataclass(frozen=True)
class DistanceBounds:
    """How far the lower symbol sits from the observable, with both bounds."""

    zeta: float
    bound_stochastic: float
    bound_oscillation: float
    actual: float


def classical_distance_bounds(nf: NormalizedFrame, f) -> DistanceBounds:
    vals = _check_observable(nf, f)
    profile = stochastic_profile(nf)
    lower = profile.P @ vals
    zeta = profile.zeta
    sup = float(np.max(np.abs(vals))) if len(vals) else 0.0
    return DistanceBounds(
        zeta=zeta,
        bound_stochastic=2.0 * zeta * sup,
        bound_oscillation=float(vals.max() - vals.min()),
        actual=float(np.max(np.abs(lower - vals))),
    )


# ---------------------------------------------------------------------------
# DFT-subspace frames on Z_M
# ---------------------------------------------------------------------------


def dft_frame(m: int, n: int) -> NormalizedFrame:
    """M unit vectors u_j[k] = exp(2 pi i j k / M) / sqrt(N), weights N/M.

    Coordinates are taken in the orthonormal Fourier basis of the
    N-dimensional subspace; N = M gives back an orthonormal basis.
    """
    if not 1 <= n <= m:
        raise BadDimsError(f"need 1 <= N <= M, got N={n}, M={m}")
    j = np.arange(m)[:, None]
    k = np.arange(n)[None, :]
    vectors = np.exp(2j * np.pi * j * k / m) / np.sqrt(n)
    weights = np.full(m, n / m)
    return NormalizedFrame(vectors, weights, "C", labels=tuple(range(m)))


def dft_matrix_element(f, p: int, q: int, subspace_dim: int | None = None) -> complex:
    """(1/M) sum_k exp(2 pi i k (p-q) / M) f(k), the (p, q) operator entry."""
    vals = np.asarray(f)
    m = vals.shape[0]
    lim = m if subspace_dim is None else subspace_dim
    if not (0 <= p < lim and 0 <= q < lim):
        raise IndexRangeError(f"indices must lie in [0, {lim}), got p={p}, q={q}")
    phases = np.exp(2j * np.pi * np.arange(m) * (p - q) / m)
    return complex(phases @ vals / m)


def geometric_matrix_element(a: float, m: int, p: int, q: int) -> complex:
    """Closed form for f(k) = a^k: (1 - a^M) / (M (1 - a e^(2 pi i (p-q)/M)))."""
    z = a * np.exp(2j * np.pi * (p - q) / m)
    if abs(1.0 - z) < 1e-12:
        return dft_matrix_element(a ** np.arange(m), p, q)
    return complex((1.0 - a**m) / (m * (1.0 - z)))


def binomial_matrix_element(m: int, p: int, q: int) -> complex:
    """Closed form for f(k) = C(M-1, k): (1 + e^(2 pi i (p-q)/M))^(M-1) / M."""
    return complex((1.0 + np.exp(2j * np.pi * (p - q) / m)) ** (m - 1) / m)


def ramp_matrix_element(m: int, p: int, q: int) -> complex:
    """Closed form for f(k) = k: (M-1)/2 on the diagonal, else 1/(e^(2 pi i (p-q)/M) - 1)."""
    if p == q:
        return complex((m - 1) / 2.0)
    return complex(1.0 / (np.exp(2j * np.pi * (p - q) / m) - 1.0))


def binomial_observable(m: int) -> np.ndarray:
    return np.array([comb(m - 1, k) for k in range(m)], dtype=np.float64)


def hermite_values(j: int, x: np.ndarray) -> np.ndarray:
    """Physicists' Hermite polynomial H_j evaluated elementwise."""
    if j < 0:
        raise ValueError("order must be nonnegative")
    h_prev = np.ones_like(x)
    if j == 0:
        return h_prev
    h = 2.0 * x
    for k in range(1, j):
        h_prev, h = h, 2.0 * x * h - 2.0 * k * h_prev
    return h


def hermite_dft_eigenfunction(m: int, j: int, trunc: int = 10) -> np.ndarray:
    """Gaussian-Hermite sampling f_j(k), an eigenfunction of the DFT.

    f_j(k) = sum_l exp(-pi (lM+k)^2 / M) H_j(sqrt(2 pi / M) (lM+k)) with
    the lattice sum truncated to |l| <= trunc; the Gaussian factor makes
    the tail negligible already at trunc = 1 for the sizes used here.
    The unitary DFT maps f_j to i^j f_j.
    """
    if j > 8:
        raise ValueError("Hermite order capped at 8")
    if trunc < 1:
        raise ValueError("need trunc >= 1")
    ls = np.arange(-trunc, trunc + 1)[:, None]
    grid = ls * m + np.arange(m)[None, :]
    x = np.sqrt(2.0 * np.pi / m) * grid
    terms = np.exp(-np.pi * grid.astype(float) ** 2 / m) * hermite_values(j, x)
    return terms.sum(axis=0)


# ---------------------------------------------------------------------------
# Coherent frames from shift/modulation operators on Z_n
# ---------------------------------------------------------------------------


def weyl_operators(n: int):
    """Shift A|j> = |j-1> and modulation B|j> = e^(2 pi i j / n)|j>."""
    if n < 2:
        raise BadDimsError("need n >= 2")
    a = np.zeros((n, n), dtype=np.complex128)
    a[(np.arange(n) - 1) % n, np.arange(n)] = 1.0
    b = np.diag(np.exp(2j * np.pi * np.arange(n) / n))
    return a, b


def weyl_frame(n: int, fiducial) -> NormalizedFrame:
    """The n^2 translates |a, b>[k] = e^(2 pi i b k / n) mu[k + a], weights 1/n.

    Any unit fiducial mu resolves the identity. A fiducial fixed (up to
    phase) by a nontrivial translate duplicates vectors; that is reported
    as a warning, not an error, since the resolution still holds.
    """
    if n < 2:
        raise BadDimsError("need n >= 2")
    mu = np.asarray(fiducial, dtype=np.complex128)
    if mu.shape != (n,):
        raise DimMismatchError(f"fiducial must have {n} components")
    if abs(np.linalg.norm(mu) - 1.0) > 1e-12:
        raise NotUnitError("fiducial must be a unit vector (within 1e-12)")
    k = np.arange(n)
    vectors = np.empty((n * n, n), dtype=np.complex128)
    labels = []
    idx = 0
    for alpha in range(n):
        shifted = mu[(k + alpha) % n]
        for beta in range(n):
            vectors[idx] = np.exp(2j * np.pi * beta * k / n) * shifted
            labels.append((alpha, beta))
            idx += 1
    for (alpha, beta), row in zip(labels[1:], vectors[1:]):
        if abs(abs(np.vdot(row, mu)) - 1.0) <= 1e-12:
            warnings.warn(
                f"fiducial is fixed (up to phase) by the translate {(alpha, beta)}; "
                "the coherent frame is degenerate",
                RuntimeWarning,
                stacklevel=2,
            )
            break
    weights = np.full(n * n, 1.0 / n)
    return NormalizedFrame(vectors, weights, "C", labels=tuple(labels))


#: squared overlaps of the two-level coherent frame with fiducial (3/5, 4/5)
_W2_SMALL = (7.0 / 25.0) ** 2
_W2_LARGE = (24.0 / 25.0) ** 2


def weyl2_lower_symbol(f) -> np.ndarray:
    """Closed-form lower symbol for n = 2 with fiducial (3/5, 4/5).

    Observable order: (0,0), (0,1), (1,0), (1,1).
    """
    vals = np.asarray(f, dtype=np.float64)
    if vals.shape != (4,):
        raise DimMismatchError("expected 4 observable values")
    f00, f01, f10, f11 = vals
    return 0.5 * np.array(
        [
            f00 + f01 * _W2_SMALL + f10 * _W2_LARGE,
            f00 * _W2_SMALL + f01 + f11 * _W2_LARGE,
            f00 * _W2_LARGE + f10 + f11 * _W2_SMALL,
            f01 * _W2_LARGE + f10 * _W2_SMALL + f11,
        ]
    )


# ---------------------------------------------------------------------------
# Cluster frame of the periodic tight-binding crystal on Z_N x Z_N
# ---------------------------------------------------------------------------

#: the four nearest-neighbor sites spanning the analysis subspace
CLUSTER = ((1, 0), (-1, 0), (0, 1), (0, -1))


def cluster_frame(n: int) -> NormalizedFrame:
    """N^2 unit vectors u_k[c] = exp(2 pi i k.c / N) / 2 over the cluster sites."""
    if n < 3:
        raise BadDimsError("need N >= 3 so the four cluster sites are distinct")
    cluster = np.array(CLUSTER)
    labels = [(k1, k2) for k1 in range(n) for k2 in range(n)]
    kvecs = np.array(labels)
    phases = kvecs @ cluster.T  # (N^2, 4)
    vectors = 0.5 * np.exp(2j * np.pi * phases / n)
    weights = np.full(n * n, 4.0 / n**2)
    return NormalizedFrame(vectors, weights, "C", labels=tuple(labels))


def cluster_lower_symbol(n: int, f) -> np.ndarray:
    """Closed form (1/N^2) sum_k' f(k') (cos d1 + cos d2)^2, d = 2 pi (k'-k)/N."""
    vals = np.asarray(f, dtype=np.float64)
    if vals.shape != (n * n,):
        raise DimMismatchError(f"observable must have {n * n} values")
    ks = np.array([(k1, k2) for k1 in range(n) for k2 in range(n)])
    d1 = 2.0 * np.pi * (ks[None, :, 0] - ks[:, None, 0]) / n
    d2 = 2.0 * np.pi * (ks[None, :, 1] - ks[:, None, 1]) / n
    weight = (np.cos(d1) + np.cos(d2)) ** 2 / n**2
    return weight @ vals


def tight_binding_hamiltonian(n: int) -> np.ndarray:
    """Nearest-neighbor sum operator on the N x N periodic crystal."""
    if n < 3:
        raise BadDimsError("need N >= 3")
    h = np.zeros((n * n, n * n))
    for a1 in range(n):
        for a2 in range(n):
            row = a1 * n + a2
            for d1, d2 in CLUSTER:
                h[row, ((a1 + d1) % n) * n + (a2 + d2) % n] += 1.0
    return h


def bloch_wave(n: int, k) -> np.ndarray:
    """Plane wave psi_k(m) = exp(2 pi i k.m / N) on the N x N crystal."""
    k1, k2 = k
    m1 = np.repeat(np.arange(n), n)
    m2 = np.tile(np.arange(n), n)
    return np.exp(2j * np.pi * (k1 * m1 + k2 * m2) / n)


def tight_binding_energy(n: int, k) -> float:
    k1, k2 = k
    return float(2.0 * np.cos(2.0 * np.pi * k1 / n) + 2.0 * np.cos(2.0 * np.pi * k2 / n))


# ---------------------------------------------------------------------------
# Simplex frames: n + 1 unit vectors in dimension n, overcomplete by one
# ---------------------------------------------------------------------------


def simplex_frame(n: int) -> NormalizedFrame:
    """n+1 unit vectors with pairwise overlaps -1/n, weights n/(n+1).

    Built by projecting the canonical basis of R^(n+1) onto the zero-sum
    hyperplane and rewriting in the Helmert orthonormal basis of that
    hyperplane, so vectors live in R^n.
    """
    if n < 1:
        raise BadDimsError("need n >= 1")
    m = n + 1
    proj = np.eye(m) - np.full((m, m), 1.0 / m)  # rows: canonical projections
    unit = proj / np.sqrt(n / m)
    helmert = np.zeros((n, m))
    for j in range(1, n + 1):
        helmert[j - 1, :j] = 1.0
        helmert[j - 1, j] = -j
        helmert[j - 1] /= np.sqrt(j * (j + 1.0))
    coords = unit @ helmert.T
    weights = np.full(m, n / m)
    return NormalizedFrame(coords, weights, "R", labels=tuple(range(m)))


def simplex_lower_symbol(n: int, f) -> np.ndarray:
    """Closed form ((n-1)/n) f(j) + (sum_k f(k)) / (n (n+1))."""
    vals = np.asarray(f, dtype=np.float64)
    if vals.shape != (n + 1,):
        raise DimMismatchError(f"observable must have {n + 1} values")
    return (n - 1.0) / n * vals + vals.sum() / (n * (n + 1.0))


def simplex_commutator_symbol(n: int, f, g) -> np.ndarray:
    """Lower symbol of [A_f, A_g], computed from the operators themselves.

    For real frames the commutator is antisymmetric, so its diagonal
    quadratic form vanishes identically; the returned values measure only
    floating-point residue.
    """
    nf = simplex_frame(n)
    af = quantize(nf, f).operator
    ag = quantize(nf, g).operator
    comm = af @ ag - ag @ af
    u = nf.unit_vectors
    return np.einsum("ij,jk,ik->i", u, comm, u)
