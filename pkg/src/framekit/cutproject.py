"""Cut-and-project machinery built on a real Parseval frame.

The frame's Gram matrix is a rank-N orthogonal projector pi on R^M; its
kernel carries the internal (perpendicular) space. Integer points of R^M
are kept when their internal image falls inside the acceptance window,
the projection of the unit cube [0, 1]^M. Points of the physical image
are represented by their integer preimages throughout, which makes the
star map exact and needs no numerical inversion.

Also provides finite-radius diagnostics: a search for nonzero integer
points killed by pi (witnesses against injectivity) and for N independent
integer points killed by pi-perp (witnesses of periodicity), plus the
normalized diffraction intensity of a finite point set.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from framekit.backend import kernels
from framekit.errors import (
    BoxTooLargeError,
    DimUnsupportedError,
    EmptyInputError,
    NoComplementError,
    NotParsevalError,
)
from framekit.frames import Frame, _projector_bases, is_parseval, naimark_embed
from framekit.textio import fmt17

logger = logging.getLogger(__name__)

#: default cap on enumerated integer points
ENUMERATION_CAP = 10**8
#: window membership tolerance, toward inclusion (the window is closed)
WINDOW_TOL = 1e-10
#: physical-space dedup resolution
PHYSICAL_DEDUP = 1e-9
#: rejected points closer than this to acceptance are counted as boundary
#: near-misses and logged
BOUNDARY_SLACK = 1e-6


@dataclass(frozen=True, eq=False)
class CutProjectScheme:
    """Projector pair and coordinate bases extracted from a Parseval frame."""

    frame: Frame
    pi: np.ndarray
    pi_perp: np.ndarray
    physical_basis: np.ndarray  # (M, N) orthonormal columns spanning range(pi)
    internal_basis: np.ndarray  # (M, M-N) orthonormal columns spanning ker(pi)

    @property
    def M(self) -> int:
        return self.pi.shape[0]

    @property
    def N(self) -> int:
        return self.physical_basis.shape[1]

    @property
    def internal_dim(self) -> int:
        return self.internal_basis.shape[1]


def build_scheme(f: Frame) -> CutProjectScheme:
    if f.field != "R":
        raise DimUnsupportedError("cut-and-project schemes are built from real frames")
    ok, residual = is_parseval(f)
    if not ok:
        raise NotParsevalError(f"Parseval residual {residual:.3e} too large")
    if f.M == f.N:
        raise NoComplementError("frame has M = N vectors; no internal space")
    pi = naimark_embed(f).pi
    internal, physical = _projector_bases(pi, f.N)
    return CutProjectScheme(
        frame=f,
        pi=pi,
        pi_perp=np.eye(f.M) - pi,
        physical_basis=physical,
        internal_basis=internal,
    )


@dataclass(frozen=True, eq=False)
class ProjectedPoint:
    """Projection of integer preimage(s) sharing one physical position."""

    preimage: tuple[int, ...]
    physical: np.ndarray
    internal: np.ndarray
    preimages: tuple[tuple[int, ...], ...] = None

    def __post_init__(self):
        if self.preimages is None:
            object.__setattr__(self, "preimages", (self.preimage,))

    @property
    def count(self) -> int:
        return len(self.preimages)


def project_integer(scheme: CutProjectScheme, n) -> ProjectedPoint:
    """Physical and internal (star map) coordinates of an integer point."""
    vec = np.asarray([int(x) for x in n], dtype=np.int64)
    if vec.shape != (scheme.M,):
        raise ValueError(f"expected an integer {scheme.M}-tuple")
    return ProjectedPoint(
        preimage=tuple(int(x) for x in vec),
        physical=scheme.physical_basis.T @ vec,
        internal=scheme.internal_basis.T @ vec,
    )


@dataclass(frozen=True, eq=False)
class Window:
    """Convex acceptance polytope in internal coordinates, as halfspaces."""

    normals: np.ndarray  # (H, D) unit outward normals
    offsets: np.ndarray  # (H,)
    vertices: np.ndarray  # deduplicated projected cube vertices, (V, D)

    def margin(self, s) -> float:
        """Max halfspace violation; <= 0 means inside."""
        return float(np.max(self.normals @ np.asarray(s) - self.offsets))

    def contains(self, s, tol: float = WINDOW_TOL) -> bool:
        return self.margin(s) <= tol


def _hull_interval(pts):
    lo, hi = float(pts.min()), float(pts.max())
    normals = np.array([[1.0], [-1.0]])
    offsets = np.array([hi, -lo])
    return normals, offsets


def _hull_2d(pts):
    """Monotone chain; returns outward halfspaces of the convex hull."""
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    p = pts[order]

    def turn(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    def half(points):
        chain = []
        for pt in points:
            while len(chain) >= 2 and turn(chain[-2], chain[-1], pt) <= 0:
                chain.pop()
            chain.append(pt)
        return chain

    lower = half(p)
    upper = half(p[::-1])
    hull = lower[:-1] + upper[:-1]
    normals, offsets = [], []
    for a, b in zip(hull, hull[1:] + hull[:1]):
        edge = b - a
        length = np.hypot(edge[0], edge[1])
        if length < 1e-14:
            continue
        # hull is counterclockwise; outward normal points right of the edge
        nvec = np.array([edge[1], -edge[0]]) / length
        normals.append(nvec)
        offsets.append(float(nvec @ a))
    return np.array(normals), np.array(offsets)


def _hull_3d(pts):
    """Outward facet halfspaces by exhaustive triple enumeration.

    Every plane through three vertices with all points on one side is a
    supporting facet plane. Quadratic in facets but the vertex count here
    is at most 2^M <= 256, so robustness wins over cleverness.
    """
    idx = np.array(list(combinations(range(len(pts)), 3)))
    a, b, c = pts[idx[:, 0]], pts[idx[:, 1]], pts[idx[:, 2]]
    nvec = np.cross(b - a, c - a)
    lengths = np.linalg.norm(nvec, axis=1)
    good = lengths > 1e-12
    nvec = nvec[good] / lengths[good, None]
    base = np.einsum("ij,ij->i", nvec, a[good])
    dots = nvec @ pts.T
    hi = dots.max(axis=1)
    lo = dots.min(axis=1)
    eps = 1e-10
    seen = {}
    for k in range(len(nvec)):
        if hi[k] - base[k] <= eps:
            n_out, off = nvec[k], hi[k]
        elif base[k] - lo[k] <= eps:
            n_out, off = -nvec[k], -lo[k]
        else:
            continue
        key = tuple(np.round(n_out, 9))
        if key not in seen or off > seen[key][1]:
            seen[key] = (n_out, off)
    normals = np.array([v[0] for v in seen.values()])
    offsets = np.array([v[1] for v in seen.values()])
    return normals, offsets


def build_window(scheme: CutProjectScheme) -> Window:
    """Acceptance window: internal projection of the closed unit cube."""
    d = scheme.internal_dim
    if d not in (1, 2, 3):
        raise DimUnsupportedError(f"window construction supports internal dim 1..3, got {d}")
    m = scheme.M
    masks = (np.arange(2**m)[:, None] >> np.arange(m)) & 1
    verts = masks @ scheme.internal_basis  # (2^M, D)
    verts = np.unique(np.round(verts, 12), axis=0)
    if d == 1:
        normals, offsets = _hull_interval(verts[:, 0])
    elif d == 2:
        normals, offsets = _hull_2d(verts)
    else:
        normals, offsets = _hull_3d(verts)
    return Window(normals=normals, offsets=offsets, vertices=verts)


def _resolve_threads(threads) -> int:
    if threads is None:
        raw = os.environ.get("FRAMEKIT_THREADS", "1")
        try:
            threads = int(raw)
        except ValueError as exc:
            raise ValueError(f"FRAMEKIT_THREADS must be a positive integer, got {raw!r}") from exc
    if threads < 1:
        raise ValueError("thread count must be a positive integer")
    return threads


def _box_size(radius: int, m: int) -> int:
    return (2 * radius + 1) ** m


def _scan_accepted(scheme, window, radius, tol, threads):
    """Accepted integer preimages in lexicographic order."""
    tmat = scheme.internal_basis.T  # (D, M): n -> internal coordinates
    if threads == 1 or scheme.M < 2 or radius == 0:
        return kernels.box_scan(radius, tmat, window.normals, window.offsets, tol)

    lead_col = tmat[:, 0]
    rest = np.ascontiguousarray(tmat[:, 1:])

    def slab(v):
        shifted = window.offsets - window.normals @ (lead_col * v)
        pts = kernels.box_scan(radius, rest, window.normals, shifted, tol)
        return np.hstack([np.full((len(pts), 1), v, dtype=np.int64), pts])

    values = range(-radius, radius + 1)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(slab, values))
    return np.concatenate(parts) if parts else np.empty((0, scheme.M), np.int64)


def generate_quasicrystal(
    scheme: CutProjectScheme,
    window: Window,
    box_radius: int,
    cap: int = ENUMERATION_CAP,
    tol: float = WINDOW_TOL,
    threads: int | None = None,
) -> list[ProjectedPoint]:
    """Accepted projections of the integer box [-B, B]^M.

    Output is ordered by (representative) preimage, lexicographically.
    Physical duplicates within ``PHYSICAL_DEDUP`` are merged into a single
    point carrying all their preimages. Rejected points that miss the
    window by less than ``BOUNDARY_SLACK`` are counted and logged, since
    closed-window boundary membership flips under rounding.
    """
    if box_radius < 0:
        raise ValueError("box radius must be nonnegative")
    if _box_size(box_radius, scheme.M) > cap:
        raise BoxTooLargeError(
            f"(2*{box_radius}+1)^{scheme.M} exceeds the {cap:.0e}-point enumeration cap"
        )
    threads = _resolve_threads(threads)
    accepted = _scan_accepted(scheme, window, box_radius, tol, threads)
    loose = _scan_accepted(scheme, window, box_radius, BOUNDARY_SLACK, threads)
    if len(loose) != len(accepted):
        logger.info(
            "quasicrystal scan: %d boundary near-misses within %.0e of acceptance",
            len(loose) - len(accepted),
            BOUNDARY_SLACK,
        )

    phys = accepted @ scheme.physical_basis
    intern = accepted @ scheme.internal_basis
    merged: dict[tuple, int] = {}
    points: list[list] = []
    for row, x, s in zip(accepted, phys, intern):
        key = tuple(np.round(x / PHYSICAL_DEDUP).astype(np.int64))
        pre = tuple(int(v) for v in row)
        if key in merged:
            points[merged[key]][3].append(pre)
        else:
            merged[key] = len(points)
            points.append([pre, x, s, [pre]])
    return [
        ProjectedPoint(preimage=p, physical=x, internal=s, preimages=tuple(pres))
        for p, x, s, pres in points
    ]


@dataclass(frozen=True)
class InjectivitySearch:
    """Result of the finite search for integer points killed by pi."""

    radius: int
    witness: tuple[int, ...] | None

    @property
    def injective_up_to_radius(self) -> bool:
        return self.witness is None


def injectivity_witness(
    scheme: CutProjectScheme, search_radius: int, cap: int = ENUMERATION_CAP
) -> InjectivitySearch:
    """First nonzero n in [-B, B]^M with pi n = 0, or no-witness verdict.

    A witness shows that the projection restricted to Z^M is not
    one-to-one; absence proves injectivity only up to the radius searched.
    """
    if _box_size(search_radius, scheme.M) > cap:
        raise BoxTooLargeError("search box exceeds the enumeration cap")
    hits = kernels.norm_scan(
        search_radius, scheme.physical_basis.T, np.zeros(scheme.N), 1e-9
    )
    for row in hits:
        if np.any(row):
            return InjectivitySearch(search_radius, tuple(int(v) for v in row))
    return InjectivitySearch(search_radius, None)


@dataclass(frozen=True)
class PeriodicitySearch:
    """Result of the finite search for integer points killed by pi-perp."""

    radius: int
    witnesses: tuple[tuple[int, ...], ...]
    periodic: bool


def periodicity_witness(
    scheme: CutProjectScheme, search_radius: int, cap: int = ENUMERATION_CAP
) -> PeriodicitySearch:
    """Up to N independent integer points with pi_perp n = 0.

    Finding N of them proves the frame periodic (its integer span is a
    lattice); fewer within the box is reported as insufficient evidence,
    not as quasiperiodicity.
    """
    if _box_size(search_radius, scheme.M) > cap:
        raise BoxTooLargeError("search box exceeds the enumeration cap")
    hits = kernels.norm_scan(
        search_radius, scheme.internal_basis.T, np.zeros(scheme.internal_dim), 1e-9
    )
    picked: list[tuple[int, ...]] = []
    basis: list[np.ndarray] = []
    for row in hits:
        if not np.any(row):
            continue
        v = row.astype(float)
        for b in basis:
            v = v - (b @ v) * b
        norm = np.linalg.norm(v)
        if norm > 1e-9:
            basis.append(v / norm)
            picked.append(tuple(int(x) for x in row))
            if len(picked) == scheme.N:
                break
    return PeriodicitySearch(search_radius, tuple(picked), len(picked) == scheme.N)


def diffraction(points, q_grid) -> np.ndarray:
    """Normalized intensity |sum_x exp(-i q.x)|^2 / count^2 per grid point."""
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise EmptyInputError("need a nonempty (P, N) array of points")
    if pts.shape[1] not in (2, 3):
        raise DimUnsupportedError("diffraction supports 2- and 3-dimensional point sets")
    qs = np.atleast_2d(np.asarray(q_grid, dtype=np.float64))
    if qs.shape[1] != pts.shape[1]:
        raise ValueError("q vectors and points must share a dimension")
    return kernels.structure_factor(pts, qs)


def points_to_csv(points: list[ProjectedPoint]) -> str:
    """CSV "n1..nM,x1..xN,s1..sD", one row per (deduplicated) point."""
    if not points:
        return ""
    m = len(points[0].preimage)
    n = len(points[0].physical)
    d = len(points[0].internal)
    header = (
        [f"n{i + 1}" for i in range(m)]
        + [f"x{i + 1}" for i in range(n)]
        + [f"s{i + 1}" for i in range(d)]
    )
    lines = [",".join(header)]
    for pt in points:
        cells = [str(c) for c in pt.preimage]
        cells += [fmt17(v) for v in pt.physical]
        cells += [fmt17(v) for v in pt.internal]
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def diffraction_to_csv(q_grid, intensities) -> str:
    qs = np.atleast_2d(np.asarray(q_grid, dtype=np.float64))
    lines = [",".join([f"q{i + 1}" for i in range(qs.shape[1])] + ["intensity"])]
    for q, val in zip(qs, intensities):
        lines.append(",".join([fmt17(v) for v in q] + [fmt17(val)]))
    return "\n".join(lines) + "\n"
