# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_kernels_py`` operation for operation."""
import numpy as np

from libc.math cimport fabs, sqrt


def cosine_matrix(rows):
    cdef const signed char[:, ::1] x = np.ascontiguousarray(rows, dtype=np.int8)
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, j, k
    cdef long long dot, acc
    cdef long long[::1] norms = np.empty(n, dtype=np.int64)
    out_arr = np.empty((n, n), dtype=np.float64)
    cdef double[:, ::1] out = out_arr
    cdef double val
    for i in range(n):
        acc = 0
        for k in range(d):
            acc += x[i, k] * x[i, k]
        if acc == 0:
            raise ValueError(f"row {i} is a zero vector; cosine similarity is undefined")
        norms[i] = acc
    with nogil:
        for i in range(n):
            for j in range(i, n):
                dot = 0
                for k in range(d):
                    dot += x[i, k] * x[j, k]
                val = <double>dot / sqrt(<double>(norms[i] * norms[j]))
                out[i, j] = val
                out[j, i] = val
    return out_arr


def hamming_matrix(rows):
    cdef const signed char[:, ::1] x = np.ascontiguousarray(rows, dtype=np.int8)
    cdef Py_ssize_t n = x.shape[0], d = x.shape[1], i, j, k
    cdef long long dist
    out_arr = np.zeros((n, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                dist = 0
                for k in range(d):
                    if x[i, k] != x[j, k]:
                        dist += 1
                out[i, j] = dist
                out[j, i] = dist
    return out_arr


def jacobi_eigh(matrix, double tol=1e-12, int max_sweeps=100):
    a_arr = np.array(matrix, dtype=np.float64, order="C", copy=True)
    cdef double[:, ::1] a = a_arr
    cdef Py_ssize_t d = a.shape[0], p, q, k
    v_arr = np.eye(d, dtype=np.float64)
    cdef double[:, ::1] v = v_arr
    cdef double scale = 0.0, off, apq, app, aqq, theta, t, c, s, akp, akq, vkp, vkq
    cdef int sweep
    cdef bint converged = False
    for p in range(d):
        for q in range(d):
            scale += a[p, q] * a[p, q]
    scale = sqrt(scale)
    if scale == 0.0:
        scale = 1.0
    with nogil:
        for sweep in range(max_sweeps):
            off = 0.0
            for p in range(d - 1):
                for q in range(p + 1, d):
                    off += a[p, q] * a[p, q]
            if sqrt(off) <= tol * scale:
                converged = True
                break
            for p in range(d - 1):
                for q in range(p + 1, d):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    theta = (aqq - app) / (2.0 * apq)
                    if fabs(theta) > 1e150:
                        t = 0.5 / theta
                    else:
                        t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                        if theta < 0.0:
                            t = -t
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for k in range(d):
                        if k != p and k != q:
                            akp = a[k, p]
                            akq = a[k, q]
                            a[k, p] = c * akp - s * akq
                            a[p, k] = a[k, p]
                            a[k, q] = s * akp + c * akq
                            a[q, k] = a[k, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for k in range(d):
                        vkp = v[k, p]
                        vkq = v[k, q]
                        v[k, p] = c * vkp - s * vkq
                        v[k, q] = s * vkp + c * vkq
    if not converged:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.array([a[k, k] for k in range(d)]), v_arr
