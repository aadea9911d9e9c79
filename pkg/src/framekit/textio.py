"""Deterministic text formatting shared by the CSV/JSON/SVG emitters."""

from __future__ import annotations


def fmt17(x: float) -> str:
    """Format a float with 17 significant digits (round-trip safe)."""
    v = float(x)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return format(v, ".17g")
