"""Integer models of the honeycomb lattice and the diamond structure.

Honeycomb nodes are integer triples with coordinate sum in {0, 1}; diamond
nodes are integer quadruples under the same constraint. Both carry the l1
word metric, a parity sign, neighbor maps that add/subtract one canonical
unit depending on parity, a small set of generating isometries, and an
embedding into the plane/space through the matching named frame.
"""

from __future__ import annotations

import numpy as np

from framekit.errors import BadGeneratorError, IndexRangeError
from framekit.groupframes import named_frame
from framekit.textio import fmt17

#: patch enumeration guard
MAX_PATCH_RADIUS = 50

_EMBED_VECTORS = {
    3: named_frame("honeycomb").vectors,
    4: named_frame("diamond").vectors,
}


def validate_node(n) -> tuple[int, ...]:
    node = tuple(int(x) for x in n)
    if len(node) not in (3, 4):
        raise ValueError(f"node must have 3 (honeycomb) or 4 (diamond) coordinates, got {len(node)}")
    if sum(node) not in (0, 1):
        raise ValueError(f"coordinate sum of {node} must be 0 or 1")
    return node


def parity(n) -> int:
    """+1 on sum-0 nodes, -1 on sum-1 nodes."""
    node = validate_node(n)
    return -1 if sum(node) % 2 else 1


def neighbors(n) -> list[tuple[int, ...]]:
    """The 3 (honeycomb) or 4 (diamond) nearest nodes, each at distance 1."""
    node = validate_node(n)
    nu = parity(node)
    out = []
    for i in range(len(node)):
        moved = list(node)
        moved[i] += nu
        out.append(tuple(moved))
    return out


def dist(a, b) -> int:
    """l1 word metric."""
    na, nb = validate_node(a), validate_node(b)
    if len(na) != len(nb):
        raise ValueError("nodes belong to different lattices")
    return sum(abs(x - y) for x, y in zip(na, nb))


def compose_neighbor(n, path) -> tuple[int, ...]:
    """Iterated neighbor map n^(i1 i2 ... ik) with 1-based indices."""
    node = validate_node(n)
    d = len(node)
    for step in path:
        if not 1 <= step <= d:
            raise IndexRangeError(f"neighbor index {step} outside 1..{d}")
        node = neighbors(node)[step - 1]
    return node


def symmetry_apply(which: int, n) -> tuple[int, ...]:
    """Apply one of the three generating isometries (1-based id).

    Honeycomb: 1 cycles the coordinates, 2 swaps the last two, 3 is the
    affine flip (1 - n1, -n2, -n3). Diamond: 1 maps to (n3, n4, n2, n1),
    2 maps to (n4, n2, n3, n1), 3 is the affine flip. All three preserve
    the coordinate-sum constraint and the metric.
    """
    node = validate_node(n)
    if len(node) == 3:
        n1, n2, n3 = node
        if which == 1:
            return (n2, n3, n1)
        if which == 2:
            return (n1, n3, n2)
        if which == 3:
            return (-n1 + 1, -n2, -n3)
    else:
        n1, n2, n3, n4 = node
        if which == 1:
            return (n3, n4, n2, n1)
        if which == 2:
            return (n4, n2, n3, n1)
        if which == 3:
            return (-n1 + 1, -n2, -n3, -n4)
    raise BadGeneratorError(f"generator id must be 1, 2 or 3, got {which}")


def embed(n) -> np.ndarray:
    """Coordinates sum_i n_i w_i with the honeycomb/diamond frame vectors."""
    node = validate_node(n)
    w = _EMBED_VECTORS[len(node)]
    return np.asarray(node, dtype=float) @ w


def generate_patch(radius: int, kind: str = "honeycomb") -> list[tuple[int, ...]]:
    """All nodes within l1 distance ``radius`` of the origin, lex order."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if radius > MAX_PATCH_RADIUS:
        raise ValueError(f"radius capped at {MAX_PATCH_RADIUS}")
    if kind == "honeycomb":
        d = 3
    elif kind == "diamond":
        d = 4
    else:
        raise ValueError(f"kind must be 'honeycomb' or 'diamond', got {kind!r}")
    grid = np.indices((2 * radius + 1,) * d).reshape(d, -1).T - radius
    sums = grid.sum(axis=1)
    keep = ((sums == 0) | (sums == 1)) & (np.abs(grid).sum(axis=1) <= radius)
    return [tuple(int(x) for x in row) for row in grid[keep]]


def patch_to_csv(nodes) -> str:
    """CSV rows "n1,..,x,y[,z]" (integer coordinates, then embedding)."""
    if not nodes:
        return ""
    d = len(nodes[0])
    coord_names = [f"n{i + 1}" for i in range(d)]
    xyz = ["x", "y", "z"][: d - 1]
    lines = [",".join(coord_names + xyz)]
    for node in nodes:
        point = embed(node)
        ints = ",".join(str(c) for c in node)
        floats = ",".join(fmt17(v) for v in point)
        lines.append(f"{ints},{floats}")
    return "\n".join(lines) + "\n"
