"""Backend dispatch for the GF(p) row-echelon kernel.

Two interchangeable implementations exist: a numba-compiled kernel
(_gfp_numba) and a pure-numpy one (_gfp_numpy).  The environment variable
GOCHA_GFP_BACKEND picks one ("numba" or "numpy"); unset, the compiled kernel
is used when numba imports, with the numpy path as fallback.  set_backend()
switches at runtime, which the cross-checking tests and the benchmark use.

Both backends implement

    rref_sparse(row_idx, row_val, row_start, ncols, p)
        -> (piv_cols, out_idx, out_val, out_start)

with CSR-style int64 arrays, strictly increasing column indices inside each
row, values in [0, p), and p a prime below 2**31 (so pairwise int64 products
cannot overflow).  Output rows are fully reduced, ordered by ascending pivot
column.
"""

import os

import numpy as np

from .errors import UsageError
from . import _gfp_numpy

try:
    from . import _gfp_numba
    HAS_NUMBA = True
except ImportError:
    _gfp_numba = None
    HAS_NUMBA = False

_FORCED = os.environ.get("GOCHA_GFP_BACKEND", "").strip().lower()
if _FORCED and _FORCED not in ("numba", "numpy"):
    raise UsageError("GOCHA_GFP_BACKEND must be 'numba' or 'numpy', got %r" % _FORCED)
if _FORCED == "numba" and not HAS_NUMBA:
    raise UsageError("GOCHA_GFP_BACKEND=numba but numba is not importable")

_active = _FORCED or ("numba" if HAS_NUMBA else "numpy")


def backend_name() -> str:
    return _active


def set_backend(name: str):
    """Switch kernels at runtime; returns the previous backend name."""
    global _active
    if name not in ("numba", "numpy"):
        raise UsageError("backend must be 'numba' or 'numpy', got %r" % name)
    if name == "numba" and not HAS_NUMBA:
        raise UsageError("numba backend requested but numba is not importable")
    previous = _active
    _active = name
    return previous


def rref_sparse(row_idx, row_val, row_start, ncols, p):
    row_idx = np.ascontiguousarray(row_idx, dtype=np.int64)
    row_val = np.ascontiguousarray(row_val, dtype=np.int64)
    row_start = np.ascontiguousarray(row_start, dtype=np.int64)
    if _active == "numba":
        return _gfp_numba.rref_sparse(row_idx, row_val, row_start, ncols, p)
    return _gfp_numpy.rref_sparse(row_idx, row_val, row_start, ncols, p)


def merge_duplicate_columns(cols, vals, p):
    """Normalize one raw row: sort columns, fold duplicates mod p, drop zeros."""
    cols = np.asarray(cols, dtype=np.int64)
    vals = np.asarray(vals, dtype=np.int64) % p
    if cols.shape[0] == 0:
        return cols, vals
    order = np.argsort(cols, kind="stable")
    cols = cols[order]
    vals = vals[order]
    boundary = np.empty(cols.shape[0], dtype=bool)
    boundary[0] = True
    boundary[1:] = cols[1:] != cols[:-1]
    starts = np.flatnonzero(boundary)
    sums = np.add.reduceat(vals, starts) % p
    out_cols = cols[starts]
    keep = sums != 0
    return out_cols[keep], sums[keep]
