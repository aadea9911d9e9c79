"""Core frame algebra.

A frame is stored as an (M, N) array whose rows are the frame vectors in
the coordinates of a fixed orthonormal basis of the N-dimensional space.
Inner products follow the physics convention <a|b> = sum(conj(a) * b).

Provides Parseval/tightness diagnostics, normalization into unit vectors
with weights, construction by projection of an orthonormal system, the
superspace (Naimark) embedding with its complementary frame, analysis and
synthesis maps, and the stochastic profile (overlap matrix, row-stochastic
matrix, Perron radius, the eta/zeta distances to orthonormality and the
stationary probability vector).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

import numpy as np

from framekit import numlin
from framekit.errors import (
    DimMismatchError,
    NoComplementError,
    NotAFrameError,
    NotOrthonormalError,
    NotParsevalError,
    NotTightError,
    ParseError,
    ZeroVectorError,
)

#: minimum frame-operator eigenvalue that still counts as "spans"
SPAN_TOL = 1e-10
#: default residual tolerance for Parseval checks
PARSEVAL_TOL = 1e-10
#: an off-diagonal overlap |<u_i|u_j>|^2 at or below this counts as an
#: orthogonal pair (Perron simplicity then not guaranteed)
ORTHOGONAL_PAIR_EPS = 1e-14


def _coerce_vectors(vectors, field=None):
    arr = np.asarray(vectors)
    if field is None:
        field = "C" if np.iscomplexobj(arr) else "R"
    dtype = np.complex128 if field == "C" else np.float64
    arr = np.array(arr, dtype=dtype)
    return arr, field


@dataclass(frozen=True, eq=False)
class Frame:
    """Ordered system of M vectors spanning an N-dimensional space, M >= N."""

    vectors: np.ndarray
    field: str = "R"

    def __post_init__(self):
        arr, fld = _coerce_vectors(self.vectors, self.field)
        if arr.ndim != 2:
            raise DimMismatchError("frame vectors must form a 2-d array")
        m, n = arr.shape
        if m < n or n < 1:
            raise NotAFrameError(f"need M >= N >= 1 vectors, got M={m}, N={n}")
        if not np.all(np.isfinite(arr.view(np.float64) if fld == "C" else arr)):
            raise ValueError("frame vectors must be finite")
        object.__setattr__(self, "vectors", arr)
        object.__setattr__(self, "field", fld)

    @property
    def M(self) -> int:
        return self.vectors.shape[0]

    @property
    def N(self) -> int:
        return self.vectors.shape[1]


@dataclass(frozen=True, eq=False)
class NormalizedFrame:
    """Unit vectors u_i with positive weights k_i resolving the identity."""

    unit_vectors: np.ndarray
    weights: np.ndarray
    field: str = "R"
    labels: tuple | None = None

    def __post_init__(self):
        arr, fld = _coerce_vectors(self.unit_vectors, self.field)
        w = np.asarray(self.weights, dtype=np.float64)
        if arr.ndim != 2 or w.shape != (arr.shape[0],):
            raise DimMismatchError("weights must match the number of unit vectors")
        norms = np.linalg.norm(arr, axis=1)
        if np.max(np.abs(norms - 1.0)) > 1e-12:
            raise ZeroVectorError("unit_vectors must have norm 1 within 1e-12")
        if np.any(w <= 0):
            raise ValueError("weights must be positive")
        m, n = arr.shape
        if abs(w.sum() - n) > 1e-10:
            raise NotParsevalError(
                f"weight sum {w.sum()!r} differs from dimension {n} by more than 1e-10"
            )
        s = (arr * w[:, None]).T @ arr.conj()
        if numlin.frobenius(s - np.eye(n)) > PARSEVAL_TOL:
            raise NotParsevalError("weighted vectors do not resolve the identity")
        object.__setattr__(self, "unit_vectors", arr)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "field", fld)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def M(self) -> int:
        return self.unit_vectors.shape[0]

    @property
    def N(self) -> int:
        return self.unit_vectors.shape[1]

    def to_frame(self) -> Frame:
        """The Parseval frame w_i = sqrt(k_i) u_i."""
        return Frame(np.sqrt(self.weights)[:, None] * self.unit_vectors, self.field)


class ParsevalCheck(NamedTuple):
    ok: bool
    residual: float


def frame_operator(f: Frame) -> np.ndarray:
    """S = sum_i |w_i><w_i| as an (N, N) Hermitian matrix."""
    w = f.vectors
    return w.T @ w.conj()


def frame_bounds(f: Frame, tol: float = SPAN_TOL) -> tuple[float, float]:
    """Extreme eigenvalues (A, B) of the frame operator; A > 0 or NotAFrame."""
    evals, _ = numlin.hermitian_eig(frame_operator(f))
    a, b = float(evals[0]), float(evals[-1])
    if a <= tol:
        raise NotAFrameError(f"minimum frame-operator eigenvalue {a:.3e} <= {tol:.0e}")
    return a, b


def is_parseval(f: Frame, tol: float = PARSEVAL_TOL) -> ParsevalCheck:
    residual = numlin.frobenius(frame_operator(f) - np.eye(f.N))
    return ParsevalCheck(bool(residual <= tol), float(residual))


def rescale_to_parseval(f: Frame, rel_tol: float = 1e-10) -> Frame:
    """Divide a tight frame by the square root of its frame constant."""
    a, b = frame_bounds(f)
    if b - a > rel_tol * max(b, 1.0):
        raise NotTightError(f"frame bounds A={a!r}, B={b!r} differ; not a tight frame")
    return Frame(f.vectors / np.sqrt(0.5 * (a + b)), f.field)


def normalize(f: Frame, tol: float = PARSEVAL_TOL) -> NormalizedFrame:
    """Split a Parseval frame into unit vectors and weights k_i = ||w_i||^2."""
    ok, residual = is_parseval(f, tol)
    if not ok:
        raise NotParsevalError(f"Parseval residual {residual:.3e} exceeds {tol:.0e}")
    norms = np.linalg.norm(f.vectors, axis=1)
    if np.any(norms <= 1e-12):
        raise ZeroVectorError("cannot normalize a frame containing a zero vector")
    return NormalizedFrame(f.vectors / norms[:, None], norms**2, f.field)


def from_projection(phis, tol: float = 1e-10) -> Frame:
    """Parseval frame from an orthonormal system, in the system's coordinates.

    ``phis`` holds N orthonormal rows of length M. The i-th frame vector is
    the vector of i-th coordinates of the rows (conjugated), i.e. the image
    of the i-th canonical basis vector under the orthogonal projection onto
    the span, expressed in that span's own coordinates. Zero rows of the
    result are legitimate here; ``normalize`` rejects them later.
    """
    arr, fld = _coerce_vectors(phis)
    if arr.ndim != 2 or arr.shape[0] > arr.shape[1]:
        raise DimMismatchError("expected N <= M orthonormal rows of length M")
    gram = arr.conj() @ arr.T
    if numlin.frobenius(gram - np.eye(arr.shape[0])) > tol:
        raise NotOrthonormalError("rows are not orthonormal at the requested tolerance")
    return Frame(arr.conj().T, fld)


@dataclass(frozen=True, eq=False)
class NaimarkEmbedding:
    """Isometric embedding of the frame's space into the superspace K^M.

    ``phi`` holds the N orthonormal rows phi_j = (<w_1|j>, ..., <w_M|j>);
    ``pi`` is the rank-N orthogonal projector with entries <w_i|w_j>. The
    image of the i-th frame vector is column i of ``pi``.
    """

    frame: Frame
    phi: np.ndarray
    pi: np.ndarray

    def analyze(self, v) -> np.ndarray:
        """The isometry v -> (<w_1|v>, ..., <w_M|v>)."""
        return analysis(self.frame, v)

    @property
    def frame_images(self) -> np.ndarray:
        """Rows are the projected canonical basis vectors pi e_i."""
        return self.pi.T


def naimark_embed(f: Frame, tol: float = PARSEVAL_TOL) -> NaimarkEmbedding:
    ok, residual = is_parseval(f, tol)
    if not ok:
        raise NotParsevalError(f"Parseval residual {residual:.3e} exceeds {tol:.0e}")
    w = f.vectors
    phi = w.conj().T
    pi = w.conj() @ w.T
    return NaimarkEmbedding(frame=f, phi=phi, pi=pi)


def _projector_bases(pi: np.ndarray, rank: int):
    """Orthonormal bases (kernel, range) of a Hermitian projector.

    Eigenvalue-0 eigenvectors span the kernel, eigenvalue-1 the range;
    the deterministic phase convention comes from ``hermitian_eig``.
    """
    m = pi.shape[0]
    evals, evecs = numlin.hermitian_eig(pi)
    n_zero = m - rank
    if np.max(np.abs(evals[:n_zero])) > 1e-8 or np.max(np.abs(evals[n_zero:] - 1.0)) > 1e-8:
        raise NotParsevalError("matrix is not an orthogonal projector of the expected rank")
    return evecs[:, :n_zero], evecs[:, n_zero:]


def orthocomplement_basis(f: Frame) -> np.ndarray:
    """(M, M-N) orthonormal basis of the kernel of the frame's projector."""
    emb = naimark_embed(f)
    kernel, _ = _projector_bases(emb.pi, f.N)
    return kernel


def complementary_frame(f: Frame) -> Frame:
    """Projections of the canonical basis onto the orthocomplement.

    Returned in the coordinates of an orthonormal basis of ker(pi), so the
    result is a Parseval frame of M vectors in dimension M - N. Together
    with the embedded frame it reassembles the canonical basis:
    pi e_i + (I - pi) e_i = e_i.
    """
    if f.M == f.N:
        raise NoComplementError("frame has M = N vectors; orthocomplement is trivial")
    kernel = orthocomplement_basis(f)
    return Frame(kernel.conj(), f.field)


def analysis(f: Frame, v) -> np.ndarray:
    """Frame coefficients (<w_1|v>, ..., <w_M|v>)."""
    vec = np.asarray(v)
    if vec.shape != (f.N,):
        raise DimMismatchError(f"expected a vector of length {f.N}, got {vec.shape}")
    return f.vectors.conj() @ vec


def synthesis(f: Frame, x) -> np.ndarray:
    """Linear combination sum_i x_i w_i."""
    coeff = np.asarray(x)
    if coeff.shape != (f.M,):
        raise DimMismatchError(f"expected {f.M} coefficients, got {coeff.shape}")
    return f.vectors.T @ coeff


def synthesis_matrix(nf: NormalizedFrame) -> np.ndarray:
    """(N, M) matrix L with L[j, i] = sqrt(k_i) u_i[j]; satisfies L L^H = I."""
    return (np.sqrt(nf.weights)[:, None] * nf.unit_vectors).T


@dataclass(frozen=True, eq=False)
class StochasticProfile:
    """Stochastic footprint of a normalized Parseval frame.

    U[i, j] = |<u_i|u_j>|^2, K = diag(weights), and P = U K is row
    stochastic with stationary vector varpi = weights / N. ``r`` is the
    spectral radius of U, ``eta = r - 1`` and ``zeta = 1 - min(weights)``
    are the two distances of the frame to an orthonormal basis. ``p_radius``
    is the spectral radius of P computed through the symmetric similarity
    K^(1/2) U K^(1/2). When ``has_orthogonal_pair`` is set, some off-diagonal
    U entry vanishes and simplicity of the Perron eigenvalue (hence the
    meaning of ``perron_vector``) is not guaranteed.
    """

    U: np.ndarray
    K: np.ndarray
    P: np.ndarray
    r: float
    eta: float
    zeta: float
    varpi: np.ndarray
    perron_vector: np.ndarray = dc_field(repr=False, default=None)
    p_radius: float = float("nan")
    has_orthogonal_pair: bool = False


def stochastic_profile(nf: NormalizedFrame) -> StochasticProfile:
    u = nf.unit_vectors
    overlaps = u.conj() @ u.T
    umat = np.abs(overlaps) ** 2
    kappa = nf.weights
    kmat = np.diag(kappa)
    p = umat * kappa[None, :]
    evals, evecs = numlin.hermitian_eig(umat)
    r = float(evals[-1])
    perron = evecs[:, -1]
    if perron.sum() < 0:
        perron = -perron
    sqrt_k = np.sqrt(kappa)
    sym = sqrt_k[:, None] * umat * sqrt_k[None, :]
    sym_evals, _ = numlin.hermitian_eig(sym)
    p_radius = float(max(abs(sym_evals[0]), abs(sym_evals[-1])))
    off = umat - np.diag(np.diagonal(umat))
    has_orth = bool(np.any((off <= ORTHOGONAL_PAIR_EPS) & ~np.eye(nf.M, dtype=bool)))
    return StochasticProfile(
        U=umat,
        K=kmat,
        P=p,
        r=r,
        eta=max(r - 1.0, 0.0),
        zeta=float(1.0 - kappa.min()),
        varpi=kappa / nf.N,
        perron_vector=perron,
        p_radius=p_radius,
        has_orthogonal_pair=has_orth,
    )


# ---------------------------------------------------------------------------
# JSON interchange format
#
# {"field": "R"|"C", "dim": N, "vectors": [[...], ...], "weights": [...]}
# Complex scalars are encoded as [re, im] pairs. A document with "weights"
# round-trips as a NormalizedFrame, otherwise as a Frame.
# ---------------------------------------------------------------------------


def _encode_scalar(x, complex_field: bool):
    if complex_field:
        return [float(np.real(x)), float(np.imag(x))]
    return float(np.real(x))


def _decode_scalar(x, complex_field: bool):
    if complex_field:
        if not (isinstance(x, (list, tuple)) and len(x) == 2):
            raise ParseError("complex entries must be [re, im] pairs")
        return complex(float(x[0]), float(x[1]))
    if isinstance(x, (list, tuple)):
        raise ParseError("real frame entries must be plain numbers")
    return float(x)


def frame_to_dict(obj: Frame | NormalizedFrame) -> dict:
    complex_field = obj.field == "C"
    vectors = obj.vectors if isinstance(obj, Frame) else obj.unit_vectors
    doc = {
        "field": obj.field,
        "dim": int(vectors.shape[1]),
        "vectors": [[_encode_scalar(x, complex_field) for x in row] for row in vectors],
    }
    if isinstance(obj, NormalizedFrame):
        doc["weights"] = [float(w) for w in obj.weights]
    return doc


def frame_from_dict(doc: dict) -> Frame | NormalizedFrame:
    try:
        fld = doc["field"]
        dim = int(doc["dim"])
        rows = doc["vectors"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"frame document missing field: {exc}") from exc
    if fld not in ("R", "C"):
        raise ParseError(f"field must be 'R' or 'C', got {fld!r}")
    complex_field = fld == "C"
    vectors = []
    for row in rows:
        if len(row) != dim:
            raise ParseError(f"vector length {len(row)} does not match dim {dim}")
        vectors.append([_decode_scalar(x, complex_field) for x in row])
    arr = np.array(vectors, dtype=np.complex128 if complex_field else np.float64)
    if "weights" in doc:
        return NormalizedFrame(arr, np.asarray(doc["weights"], dtype=np.float64), fld)
    return Frame(arr, fld)


def save_frame(obj: Frame | NormalizedFrame, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(frame_to_dict(obj), fh, indent=2)
        fh.write("\n")


def load_frame(path) -> Frame | NormalizedFrame:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read frame file {path}: {exc}") from exc
    return frame_from_dict(doc)
