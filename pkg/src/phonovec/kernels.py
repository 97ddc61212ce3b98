"""Backend selection for the numeric kernels.

The compiled extension is used when it was built; otherwise the
pure-Python implementation takes over.  Both return identical cosine and
Hamming matrices; Jacobi results agree to rounding.
"""
import numpy as np

from . import _kernels_py

try:
    from . import _kernels as _compiled
except ImportError:  # extension not built
    _compiled = None

_BACKENDS = {"python": _kernels_py}
if _compiled is not None:
    _BACKENDS["cython"] = _compiled

_active = _BACKENDS.get("cython", _kernels_py)


def available_backends():
    return sorted(_BACKENDS)


def get_backend():
    return "cython" if _active is _compiled and _compiled is not None else "python"


def set_backend(name):
    """Switch the process-wide kernel backend (``"cython"`` or ``"python"``)."""
    global _active
    try:
        _active = _BACKENDS[name]
    except KeyError:
        raise ValueError(f"backend {name!r} unavailable; choose from {available_backends()}") from None


def backend_module(name=None):
    return _active if name is None else _BACKENDS[name]


def cosine_matrix(rows, backend=None):
    return backend_module(backend).cosine_matrix(np.ascontiguousarray(rows, dtype=np.int8))


def hamming_matrix(rows, backend=None):
    return backend_module(backend).hamming_matrix(np.ascontiguousarray(rows, dtype=np.int8))


def jacobi_eigh(matrix, tol=1e-12, max_sweeps=100, backend=None):
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError("jacobi_eigh needs a square matrix")
    if not np.array_equal(matrix, matrix.T):
        raise ValueError("jacobi_eigh needs a symmetric matrix")
    return backend_module(backend).jacobi_eigh(matrix, tol, max_sweeps)
