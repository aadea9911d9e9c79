"""Pure NumPy implementations of the hot kernels.

Mirrors the interface of the compiled module ``framekit._core``; the active
implementation is chosen once, at import time, by ``framekit.backend``.

Kernels
-------
jacobi_eigh(a)
    Cyclic Jacobi eigendecomposition of a real symmetric or complex
    Hermitian matrix (unsorted).
box_scan(radius, tmat, normals, offsets, tol)
    Lexicographic scan of the integer box [-radius, radius]^M keeping the
    points whose image under ``tmat`` satisfies every halfspace.
norm_scan(radius, rmat, base, tol)
    Lexicographic scan keeping points with ||base + rmat @ n|| <= tol.
structure_factor(points, qs)
    Normalized diffraction intensity |sum_x exp(-i q.x)|^2 / P^2.
"""

from __future__ import annotations

import numpy as np

#: stop sweeping once the off-diagonal mass is below this times ||A||_F
OFF_TOL = 1e-14
MAX_SWEEPS = 100

#: largest chunk of integer points materialized at once by the scans
CHUNK = 1 << 20


def jacobi_eigh(a):
    """Diagonalize a Hermitian matrix by cyclic Jacobi rotations.

    Returns (w, v) with a == v @ diag(w) @ v.conj().T up to roundoff.
    Eigenvalues are unsorted; callers sort. The input is not modified.
    """
    a = np.array(a)
    d = a.shape[0]
    v = np.eye(d, dtype=a.dtype)
    if d < 2:
        return np.diagonal(a).real.copy(), v
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(d), v
    complex_case = np.iscomplexobj(a)
    for _ in range(MAX_SWEEPS):
        off = np.linalg.norm(a - np.diag(np.diagonal(a)))
        if off <= OFF_TOL * scale:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                if abs(apq) <= 1e-18 * scale:
                    continue
                if complex_case:
                    r = abs(apq)
                    phase = apq / r
                else:
                    r = apq
                    phase = 1.0
                theta = (a[q, q].real - a[p, p].real) / (2.0 * abs(r))
                if r < 0:
                    theta = -theta
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta == 0.0:
                    t = 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # unitary plane rotation J: J[p,p]=J[q,q]=c,
                # J[p,q]=s*phase, J[q,p]=-s*conj(phase); apply a <- J^H a J
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = c * rp - s * phase * rq
                a[q, :] = s * np.conj(phase) * rp + c * rq
                cp = a[:, p].copy()
                cq = a[:, q].copy()
                a[:, p] = c * cp - s * np.conj(phase) * cq
                a[:, q] = s * phase * cp + c * cq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * np.conj(phase) * vq
                v[:, q] = s * phase * vp + c * vq
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    return np.diagonal(a).real.copy(), v


def _box_chunks(radius, m, limit=CHUNK):
    """Yield the integer box [-radius, radius]^m in lexicographic order."""
    n = 2 * radius + 1
    if n**m <= limit:
        grid = np.indices((n,) * m).reshape(m, -1).T - radius
        yield grid.astype(np.int64, copy=False)
        return
    for lead in range(-radius, radius + 1):
        for sub in _box_chunks(radius, m - 1, limit):
            col = np.full((len(sub), 1), lead, dtype=np.int64)
            yield np.hstack([col, sub])


def box_scan(radius, tmat, normals, offsets, tol):
    tmat = np.asarray(tmat, dtype=np.float64)
    normals = np.asarray(normals, dtype=np.float64)
    offsets = np.asarray(offsets, dtype=np.float64)
    m = tmat.shape[1]
    kept = []
    for chunk in _box_chunks(int(radius), m):
        s = chunk @ tmat.T
        ok = np.all(s @ normals.T <= offsets + tol, axis=1)
        if ok.any():
            kept.append(chunk[ok])
    if not kept:
        return np.empty((0, m), dtype=np.int64)
    return np.concatenate(kept)


def norm_scan(radius, rmat, base, tol):
    rmat = np.asarray(rmat, dtype=np.float64)
    base = np.asarray(base, dtype=np.float64)
    m = rmat.shape[1]
    kept = []
    for chunk in _box_chunks(int(radius), m):
        img = chunk @ rmat.T + base
        ok = np.einsum("ij,ij->i", img, img) <= tol * tol
        if ok.any():
            kept.append(chunk[ok])
    if not kept:
        return np.empty((0, m), dtype=np.int64)
    return np.concatenate(kept)


def structure_factor(points, qs):
    points = np.asarray(points, dtype=np.float64)
    qs = np.asarray(qs, dtype=np.float64)
    npts = points.shape[0]
    out = np.empty(qs.shape[0])
    # block over q to keep the phase matrix below ~32M entries
    block = max(1, (1 << 25) // max(npts, 1))
    for lo in range(0, qs.shape[0], block):
        phases = qs[lo : lo + block] @ points.T
        amp = np.exp(-1j * phases).sum(axis=1)
        out[lo : lo + block] = (amp.real**2 + amp.imag**2) / npts**2
    return out
