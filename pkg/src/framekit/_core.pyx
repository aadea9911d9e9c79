# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: Jacobi eigensweeps, integer-box scans, structure factors.

Interface mirror of ``framekit._corepy``; see that module for contracts.
"""

import numpy as np

from libc.math cimport cos, fabs, sin, sqrt

cdef double OFF_TOL = 1e-14
cdef int MAX_SWEEPS = 100


def jacobi_eigh(a):
    arr = np.array(a)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("expected a square matrix")
    if arr.shape[0] < 2:
        return np.diagonal(arr).real.copy(), np.eye(arr.shape[0], dtype=arr.dtype)
    if np.iscomplexobj(arr):
        return _jacobi_complex(np.ascontiguousarray(arr, dtype=np.complex128))
    return _jacobi_real(np.ascontiguousarray(arr, dtype=np.float64))


cdef _jacobi_real(double[:, ::1] a):
    cdef Py_ssize_t d = a.shape[0]
    v_arr = np.eye(d)
    cdef double[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i, sweep
    cdef double scale = 0.0, off, apq, theta, t, c, s, xp, xq
    for p in range(d):
        for q in range(d):
            scale += a[p, q] * a[p, q]
    scale = sqrt(scale)
    if scale == 0.0:
        return np.zeros(d), v_arr
    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(d):
            for q in range(d):
                if p != q:
                    off += a[p, q] * a[p, q]
        if sqrt(off) <= OFF_TOL * scale:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                if fabs(apq) <= 1e-18 * scale:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if theta == 0.0:
                    t = 1.0
                elif theta > 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(d):
                    xp = a[p, i]
                    xq = a[q, i]
                    a[p, i] = c * xp - s * xq
                    a[q, i] = s * xp + c * xq
                for i in range(d):
                    xp = a[i, p]
                    xq = a[i, q]
                    a[i, p] = c * xp - s * xq
                    a[i, q] = s * xp + c * xq
                    xp = v[i, p]
                    xq = v[i, q]
                    v[i, p] = c * xp - s * xq
                    v[i, q] = s * xp + c * xq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.empty(d)
    for p in range(d):
        w[p] = a[p, p]
    return w, v_arr


cdef _jacobi_complex(double complex[:, ::1] a):
    cdef Py_ssize_t d = a.shape[0]
    v_arr = np.eye(d, dtype=np.complex128)
    cdef double complex[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i, sweep
    cdef double scale = 0.0, off, r, theta, t, c, s
    cdef double complex apq, phase, conj_phase, zp, zq
    for p in range(d):
        for q in range(d):
            scale += (a[p, q].real * a[p, q].real + a[p, q].imag * a[p, q].imag)
    scale = sqrt(scale)
    if scale == 0.0:
        return np.zeros(d), v_arr
    for sweep in range(MAX_SWEEPS):
        off = 0.0
        for p in range(d):
            for q in range(d):
                if p != q:
                    off += (a[p, q].real * a[p, q].real + a[p, q].imag * a[p, q].imag)
        if sqrt(off) <= OFF_TOL * scale:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p, q]
                r = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if r <= 1e-18 * scale:
                    continue
                phase = apq / r
                conj_phase = phase.conjugate()
                theta = (a[q, q].real - a[p, p].real) / (2.0 * r)
                if theta == 0.0:
                    t = 1.0
                elif theta > 0.0:
                    t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for i in range(d):
                    zp = a[p, i]
                    zq = a[q, i]
                    a[p, i] = c * zp - s * phase * zq
                    a[q, i] = s * conj_phase * zp + c * zq
                for i in range(d):
                    zp = a[i, p]
                    zq = a[i, q]
                    a[i, p] = c * zp - s * conj_phase * zq
                    a[i, q] = s * phase * zp + c * zq
                    zp = v[i, p]
                    zq = v[i, q]
                    v[i, p] = c * zp - s * conj_phase * zq
                    v[i, q] = s * phase * zp + c * zq
                a[p, q] = 0.0
                a[q, p] = 0.0
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    w = np.empty(d)
    for p in range(d):
        w[p] = a[p, p].real
    return w, v_arr


def box_scan(radius, tmat, normals, offsets, tol):
    """Integer points of [-radius, radius]^M whose image satisfies all halfspaces."""
    cdef double[:, ::1] t = np.ascontiguousarray(tmat, dtype=np.float64)
    cdef double[:, ::1] hn = np.ascontiguousarray(normals, dtype=np.float64)
    cdef double[::1] hoff = np.ascontiguousarray(offsets, dtype=np.float64)
    cdef double tolv = tol
    cdef Py_ssize_t dd = t.shape[0], m = t.shape[1], nh = hn.shape[0]
    cdef long rad = radius
    cdef long side = 2 * rad + 1

    out_arr = np.empty((1024, m), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t cap = 1024, count = 0

    cdef long long[::1] n = np.full(m, -rad, dtype=np.int64)
    sbuf_arr = np.zeros(dd)
    cdef double[::1] sbuf = sbuf_arr
    cdef Py_ssize_t i, j, k, axis
    cdef double acc
    cdef bint ok, done = False

    while not done:
        for j in range(dd):
            acc = 0.0
            for i in range(m):
                acc += t[j, i] * n[i]
            sbuf[j] = acc
        ok = True
        for k in range(nh):
            acc = 0.0
            for j in range(dd):
                acc += hn[k, j] * sbuf[j]
            if acc > hoff[k] + tolv:
                ok = False
                break
        if ok:
            if count == cap:
                cap *= 2
                new_arr = np.empty((cap, m), dtype=np.int64)
                new_arr[:count] = out_arr[:count]
                out_arr = new_arr
                out = out_arr
            for i in range(m):
                out[count, i] = n[i]
            count += 1
        # odometer: last coordinate fastest, lexicographic ascending
        axis = m - 1
        while True:
            n[axis] += 1
            if n[axis] <= rad:
                break
            n[axis] = -rad
            if axis == 0:
                done = True
                break
            axis -= 1
    return out_arr[:count].copy()


def norm_scan(radius, rmat, base, tol):
    """Integer points with ||base + rmat @ n|| <= tol, lexicographic order."""
    cdef double[:, ::1] rm = np.ascontiguousarray(rmat, dtype=np.float64)
    cdef double[::1] b = np.ascontiguousarray(base, dtype=np.float64)
    cdef double tol2 = tol * tol
    cdef Py_ssize_t dd = rm.shape[0], m = rm.shape[1]
    cdef long rad = radius

    out_arr = np.empty((256, m), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t cap = 256, count = 0

    cdef long long[::1] n = np.full(m, -rad, dtype=np.int64)
    cdef Py_ssize_t i, j, axis
    cdef double acc, total
    cdef bint done = False

    while not done:
        total = 0.0
        for j in range(dd):
            acc = b[j]
            for i in range(m):
                acc += rm[j, i] * n[i]
            total += acc * acc
            if total > tol2:
                break
        if total <= tol2:
            if count == cap:
                cap *= 2
                new_arr = np.empty((cap, m), dtype=np.int64)
                new_arr[:count] = out_arr[:count]
                out_arr = new_arr
                out = out_arr
            for i in range(m):
                out[count, i] = n[i]
            count += 1
        axis = m - 1
        while True:
            n[axis] += 1
            if n[axis] <= rad:
                break
            n[axis] = -rad
            if axis == 0:
                done = True
                break
            axis -= 1
    return out_arr[:count].copy()


def structure_factor(points, qs):
    """Normalized diffraction intensity per q vector."""
    cdef double[:, ::1] pts = np.ascontiguousarray(points, dtype=np.float64)
    cdef double[:, ::1] qv = np.ascontiguousarray(qs, dtype=np.float64)
    cdef Py_ssize_t npts = pts.shape[0], dim = pts.shape[1], nq = qv.shape[0]
    out_arr = np.empty(nq)
    cdef double[::1] out = out_arr
    cdef Py_ssize_t a, b, j
    cdef double phase, re, im
    for a in range(nq):
        re = 0.0
        im = 0.0
        for b in range(npts):
            phase = 0.0
            for j in range(dim):
                phase += qv[a, j] * pts[b, j]
            re += cos(phase)
            im -= sin(phase)
        out[a] = (re * re + im * im) / (<double> npts * <double> npts)
    return out_arr
