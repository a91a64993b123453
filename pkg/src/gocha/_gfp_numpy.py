"""Pure-numpy sparse row echelon over GF(p), same contract as the compiled
backend.

Rows are held as pairs of int64 arrays (sorted column indices, values in
[1, p)).  Eliminations combine two rows with concatenate / stable argsort /
reduceat instead of a hand-rolled merge; slower than the compiled kernel but
dependency-light and bit-for-bit equal in output.
"""

import numpy as np

__all__ = ["rref_sparse", "modinv"]


def modinv(a, p):
    return pow(int(a), p - 2, p)


def _combine(ai, av, coef, bi, bv, p):
    """a - coef*b for two sorted sparse rows; returns a sorted sparse row."""
    idx = np.concatenate((ai, bi))
    val = np.concatenate((av, (-coef * bv) % p))
    order = np.argsort(idx, kind="stable")
    idx = idx[order]
    val = val[order]
    if idx.shape[0] == 0:
        return idx, val
    boundary = np.empty(idx.shape[0], dtype=bool)
    boundary[0] = True
    boundary[1:] = idx[1:] != idx[:-1]
    starts = np.flatnonzero(boundary)
    sums = np.add.reduceat(val, starts) % p
    cols = idx[starts]
    keep = sums != 0
    return cols[keep], sums[keep]


def rref_sparse(row_idx, row_val, row_start, ncols, p):
    """See the compiled backend for the contract; output is identical."""
    row_idx = np.asarray(row_idx, dtype=np.int64)
    row_val = np.asarray(row_val, dtype=np.int64)
    row_start = np.asarray(row_start, dtype=np.int64)
    nrows = row_start.shape[0] - 1
    p = int(p)

    piv_of_col = {}
    rows = []  # slot -> (idx array, val array), lead value 1
    slot_col = []

    for r in range(nrows):
        s, e = int(row_start[r]), int(row_start[r + 1])
        ci = row_idx[s:e]
        cv = row_val[s:e] % p
        keep = cv != 0
        ci, cv = ci[keep], cv[keep]
        while ci.shape[0] > 0:
            lead = int(ci[0])
            slot = piv_of_col.get(lead)
            if slot is None:
                break
            pi, pv = rows[slot]
            ci, cv = _combine(ci, cv, int(cv[0]), pi, pv, p)
        if ci.shape[0] == 0:
            continue
        inv = modinv(int(cv[0]), p)
        cv = (cv * inv) % p
        piv_of_col[int(ci[0])] = len(rows)
        slot_col.append(int(ci[0]))
        rows.append((ci, cv))

    nslots = len(rows)
    order = sorted(range(nslots), key=lambda t: slot_col[t])
    reduced = [None] * nslots
    is_piv = np.zeros(ncols, dtype=bool)
    if slot_col:
        is_piv[np.array(slot_col, dtype=np.int64)] = True

    for t in range(nslots - 1, -1, -1):
        slot = order[t]
        ci, cv = rows[slot]
        k = 1
        while k < ci.shape[0]:
            colk = int(ci[k])
            if not is_piv[colk]:
                k += 1
                continue
            ri, rv = reduced[piv_of_col[colk]]
            # cancels the colk entry; introduces non-pivot columns only,
            # all above colk, so k stays put
            ci, cv = _combine(ci, cv, int(cv[k]), ri, rv, p)
        reduced[slot] = (ci, cv)

    piv_cols = np.array([slot_col[order[t]] for t in range(nslots)],
                        dtype=np.int64)
    lens = [reduced[order[t]][0].shape[0] for t in range(nslots)]
    out_start = np.zeros(nslots + 1, dtype=np.int64)
    np.cumsum(lens, out=out_start[1:])
    if nslots:
        out_idx = np.concatenate([reduced[order[t]][0] for t in range(nslots)])
        out_val = np.concatenate([reduced[order[t]][1] for t in range(nslots)])
    else:
        out_idx = np.empty(0, dtype=np.int64)
        out_val = np.empty(0, dtype=np.int64)
    return piv_cols, out_idx.astype(np.int64), out_val.astype(np.int64), out_start
