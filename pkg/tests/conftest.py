"""Shared fixtures.

The GF(p) kernel may be numba-compiled on first call; warming it once per
session keeps the timed tests measuring arithmetic, not compilation.
"""

from __future__ import annotations

import numpy as np
import pytest

from gocha import gfp


@pytest.fixture(scope="session", autouse=True)
def warm_gfp_kernel():
    idx = np.array([0, 1], dtype=np.int64)
    val = np.array([1, 1], dtype=np.int64)
    start = np.array([0, 2], dtype=np.int64)
    gfp.rref_sparse(idx, val, start, 4, 2)
    yield
