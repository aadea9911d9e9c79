"""Tight frames from finite-group orbits.

A finite group acting orthogonally (or unitarily) and irreducibly turns
any nonzero orbit into an equal-norm tight frame. This module carries the
three representations used throughout the package (cyclic rotations of the
plane, the tetrahedral rotation group, the icosahedral rotation group),
a breadth-first orbit builder with optional quotient by scalar multiples,
the named literal frames (honeycomb, diamond, icosahedral6, cn(n)), and
the Fibonacci-ratio approximants that deform the periodic tetrahedral
frame into the quasiperiodic icosahedral one.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from framekit import numlin
from framekit.errors import (
    BadNameError,
    BadOrderError,
    OrbitOverflowError,
    OutOfRangeError,
    ZeroSeedError,
)
from framekit.frames import Frame

#: golden ratio
TAU = (1.0 + np.sqrt(5.0)) / 2.0

#: default cap on orbit closure size
ORBIT_CAP = 10000


@dataclass(frozen=True, eq=False)
class OrthogonalRep:
    """Generators of an orthogonal/unitary representation of a finite group."""

    generators: tuple
    relations_checked: bool = False

    def __post_init__(self):
        gens = tuple(np.asarray(g) for g in self.generators)
        if not gens:
            raise ValueError("need at least one generator")
        d = gens[0].shape[0]
        for g in gens:
            if g.shape != (d, d):
                raise ValueError("generators must be square matrices of equal size")
            if numlin.frobenius(g.conj().T @ g - np.eye(d)) > 1e-12:
                raise ValueError("generators must be orthogonal/unitary within 1e-12")
        object.__setattr__(self, "generators", gens)

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]


def _relations_hold(words, dim) -> bool:
    eye = np.eye(dim)
    return all(numlin.frobenius(w - eye) <= 1e-12 for w in words)


def cyclic_rep(n: int) -> OrthogonalRep:
    """Rotation of the plane by 2*pi/n, generating the cyclic group C_n."""
    if n < 3:
        raise BadOrderError(f"cyclic order must be >= 3, got {n}")
    a = 2.0 * np.pi / n
    g = np.array([[np.cos(a), -np.sin(a)], [np.sin(a), np.cos(a)]])
    power = np.linalg.matrix_power(g, n)
    return OrthogonalRep((g,), relations_checked=_relations_hold([power], 2))


def tetrahedral_rep() -> OrthogonalRep:
    """Rotations g (sign flip of the first two axes) and h (coordinate cycle)."""
    g = np.diag([-1.0, -1.0, 1.0])
    h = np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [1.0, 0.0, 0.0]])
    words = [g @ g, h @ h @ h, np.linalg.matrix_power(g @ h, 3)]
    return OrthogonalRep((g, h), relations_checked=_relations_hold(words, 3))


def icosahedral_rep() -> OrthogonalRep:
    """Rotations r (order 5) and s (order 2) of the regular icosahedron."""
    t = TAU
    r = np.array(
        [
            [(t - 1.0) / 2.0, -t / 2.0, 0.5],
            [t / 2.0, 0.5, (t - 1.0) / 2.0],
            [-0.5, (t - 1.0) / 2.0, t / 2.0],
        ]
    )
    s = np.diag([-1.0, -1.0, 1.0])
    words = [np.linalg.matrix_power(r, 5), s @ s, np.linalg.matrix_power(r @ s, 3)]
    return OrthogonalRep((r, s), relations_checked=_relations_hold(words, 3))


@dataclass(frozen=True, eq=False)
class OrbitFrame(Frame):
    """Frame formed by the (possibly scalar-quotiented) orbit of a seed."""

    seed: np.ndarray = None
    group_order_traversed: int = 0
    quotient_by_scalar: bool = False


def _phase_canonical(v: np.ndarray) -> np.ndarray:
    """Scalar-class representative: first significant entry real positive."""
    mags = np.abs(v)
    top = mags.max()
    idx = int(np.argmax(mags > 1e-9 * top))
    pivot = v[idx]
    if np.iscomplexobj(v):
        return v * (np.conj(pivot) / abs(pivot))
    return -v if pivot < 0 else v


def orbit_frame(
    rep: OrthogonalRep,
    seed,
    quotient_by_scalar: bool = False,
    dedup_tol: float = 1e-9,
    max_orbit: int = ORBIT_CAP,
) -> OrbitFrame:
    """Breadth-first closure of the seed under the generators.

    Vectors closer than ``dedup_tol`` are identified. With
    ``quotient_by_scalar`` every vector is first mapped to a deterministic
    representative of its scalar-multiple class (first significant
    coordinate made real positive), so one vector per class survives.
    The result is checked to be an equal-norm tight frame; this fails if
    the representation is reducible, which is the caller's lookout.
    """
    seed = np.asarray(seed, dtype=complex if np.iscomplexobj(rep.generators[0]) else float)
    if seed.shape != (rep.dim,):
        raise ValueError(f"seed must be a vector of length {rep.dim}")
    norm = np.linalg.norm(seed)
    if norm <= dedup_tol:
        raise ZeroSeedError("orbit seed is numerically zero")

    canon = _phase_canonical if quotient_by_scalar else (lambda v: v)
    start = canon(seed)
    found = [start]
    stack = np.array([start])
    queue = [start]
    while queue:
        v = queue.pop(0)
        for g in rep.generators:
            w = canon(g @ v)
            dist2 = np.sum(np.abs(stack - w) ** 2, axis=1)
            if dist2.min() > dedup_tol**2:
                if len(found) >= max_orbit:
                    raise OrbitOverflowError(f"orbit closure exceeded {max_orbit} elements")
                found.append(w)
                stack = np.vstack([stack, w])
                queue.append(w)

    vectors = np.array(found)
    norms = np.linalg.norm(vectors, axis=1)
    if np.max(np.abs(norms - norm)) > 1e-12 * max(norm, 1.0):
        raise ValueError("orbit vectors have unequal norms; representation not orthogonal?")
    m, n = vectors.shape
    target = m * norm**2 / n
    s = vectors.T @ vectors.conj()
    if numlin.frobenius(s - target * np.eye(n)) > 1e-10 * max(target, 1.0):
        raise ValueError("orbit is not tight; the representation must be irreducible")
    return OrbitFrame(
        vectors=vectors,
        field="C" if np.iscomplexobj(vectors) else "R",
        seed=seed,
        group_order_traversed=m,
        quotient_by_scalar=quotient_by_scalar,
    )


# Literal vector sets, kept in their conventional printed order.

_HONEYCOMB = np.array(
    [
        [np.sqrt(2.0 / 3.0), 0.0],
        [-1.0 / np.sqrt(6.0), 1.0 / np.sqrt(2.0)],
        [-1.0 / np.sqrt(6.0), -1.0 / np.sqrt(2.0)],
    ]
)

_DIAMOND = np.array(
    [
        [-0.5, 0.5, 0.5],
        [0.5, -0.5, 0.5],
        [0.5, 0.5, -0.5],
        [-0.5, -0.5, -0.5],
    ]
)

_ICOSAHEDRAL6 = np.array(
    [
        [1.0, TAU, 0.0],
        [-1.0, TAU, 0.0],
        [-TAU, 0.0, 1.0],
        [0.0, -1.0, TAU],
        [TAU, 0.0, 1.0],
        [0.0, 1.0, TAU],
    ]
) / np.sqrt(2.0 * (TAU + 2.0))


def named_frame(name: str) -> Frame:
    """Resolve a named frame: honeycomb, diamond, icosahedral6 or cn(n).

    honeycomb and diamond are Parseval; icosahedral6 is the quasiperiodic
    Parseval 6-vector frame; cn(n) is the orbit of (1, 0) under C_n, a
    tight frame of n unit vectors with frame constant n/2.
    """
    key = name.strip().lower()
    if key == "honeycomb":
        return Frame(_HONEYCOMB.copy())
    if key == "diamond":
        return Frame(_DIAMOND.copy())
    if key == "icosahedral6":
        return Frame(_ICOSAHEDRAL6.copy())
    if key.startswith("cn(") and key.endswith(")"):
        try:
            n = int(key[3:-1])
        except ValueError as exc:
            raise BadNameError(f"bad cyclic frame spec {name!r}") from exc
        if n < 3:
            raise BadOrderError(f"cn(n) needs n >= 3, got {n}")
        angles = 2.0 * np.pi * np.arange(n) / n
        return Frame(np.column_stack([np.cos(angles), np.sin(angles)]))
    raise BadNameError(f"unknown frame name {name!r}")


def fibonacci_ratio(n: int) -> float:
    """Ratio f_(n+1)/f_n of consecutive Fibonacci numbers, f_0 = f_1 = 1."""
    if n < 1:
        raise ValueError("need n >= 1")
    prev, cur = 1, 1
    for _ in range(n):
        prev, cur = cur, prev + cur
    return cur / prev


def fibonacci_frame(n: int) -> OrbitFrame:
    """Tetrahedral orbit of (1, f_(n+1)/f_n, 0): 12 vectors, tight, periodic."""
    ratio = fibonacci_ratio(n)
    return orbit_frame(tetrahedral_rep(), np.array([1.0, ratio, 0.0]))


def deform_frame(t: float) -> OrbitFrame:
    """Tetrahedral orbit of (1-t)*(1, 2, 0) + t*(1, tau, 0) for t in [0, 1].

    t = 0 is the periodic orbit of (1, 2, 0); t = 1 lands on the icosahedral
    vertex set, so the family deforms a periodic frame into a quasiperiodic
    one through tight frames.
    """
    if not 0.0 <= t <= 1.0:
        raise OutOfRangeError(f"deformation parameter must lie in [0, 1], got {t}")
    seed = (1.0 - t) * np.array([1.0, 2.0, 0.0]) + t * np.array([1.0, TAU, 0.0])
    return orbit_frame(tetrahedral_rep(), seed)
