"""Pure-Python kernels; reference behaviour for the compiled ``_kernels`` module."""
import math

import numpy as np


def cosine_matrix(rows):
    data = [list(r) for r in np.asarray(rows).tolist()]
    norms = [sum(x * x for x in r) for r in data]
    for i, na in enumerate(norms):
        if na == 0:
            raise ValueError(f"row {i} is a zero vector; cosine similarity is undefined")
    n = len(data)
    out = np.empty((n, n), dtype=np.float64)
    for i in range(n):
        ri = data[i]
        for j in range(i, n):
            rj = data[j]
            dot = 0
            for x, y in zip(ri, rj):
                dot += x * y
            val = dot / math.sqrt(norms[i] * norms[j])
            out[i, j] = val
            out[j, i] = val
    return out


def hamming_matrix(rows):
    data = np.asarray(rows).tolist()
    n = len(data)
    out = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            dist = sum(1 for x, y in zip(data[i], data[j]) if x != y)
            out[i, j] = dist
            out[j, i] = dist
    return out


def jacobi_eigh(matrix, tol=1e-12, max_sweeps=100):
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Returns ``(eigenvalues, eigenvectors)`` with eigenvectors in columns,
    in the order the rotations leave them (unsorted).
    """
    a = np.array(matrix, dtype=np.float64).tolist()
    d = len(a)
    v = [[1.0 if i == j else 0.0 for j in range(d)] for i in range(d)]
    scale = math.sqrt(sum(x * x for row in a for x in row))
    if scale == 0.0:
        scale = 1.0
    for _ in range(max_sweeps):
        off = 0.0
        for p in range(d - 1):
            for q in range(p + 1, d):
                off += a[p][q] * a[p][q]
        if math.sqrt(off) <= tol * scale:
            break
        for p in range(d - 1):
            for q in range(p + 1, d):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                app = a[p][p]
                aqq = a[q][q]
                theta = (aqq - app) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(d):
                    if k != p and k != q:
                        akp = a[k][p]
                        akq = a[k][q]
                        a[k][p] = a[p][k] = c * akp - s * akq
                        a[k][q] = a[q][k] = s * akp + c * akq
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq
                a[p][q] = a[q][p] = 0.0
                for k in range(d):
                    vkp = v[k][p]
                    vkq = v[k][q]
                    v[k][p] = c * vkp - s * vkq
                    v[k][q] = s * vkp + c * vkq
    else:
        raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    return np.array([a[i][i] for i in range(d)]), np.array(v)
