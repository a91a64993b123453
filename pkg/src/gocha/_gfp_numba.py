"""Numba-compiled sparse row echelon over GF(p).

Row layout is CSR-ish: three int64 arrays (column indices, values, row start
offsets).  Preconditions on input rows: column indices strictly increasing
within each row, values in [0, p).  p must be a prime below 2**31 so that
int64 products never overflow.

The algorithm is forward insertion (reduce each incoming row against stored
pivot rows, leftmost column first, then normalize and store) followed by one
backward pass in descending pivot order that clears pivot columns from every
tail, producing the fully reduced form.  Pivot choice is deterministic:
always the leftmost nonzero column.
"""

import numpy as np
from numba import njit

__all__ = ["rref_sparse", "modinv"]


@njit(cache=True)
def modinv(a, p):
    """a^(p-2) mod p by binary exponentiation (p prime, a nonzero mod p)."""
    result = np.int64(1)
    base = np.int64(a % p)
    e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


@njit(cache=True)
def rref_sparse(row_idx, row_val, row_start, ncols, p):
    """Reduced row echelon form of a sparse GF(p) matrix.

    Returns (piv_cols, out_idx, out_val, out_start): pivot columns in
    ascending order, and the reduced rows in matching order, CSR layout.
    Each output row has value 1 at its pivot column and support only on its
    pivot plus non-pivot columns.
    """
    nrows = row_start.shape[0] - 1
    piv_of_col = np.full(ncols, -1, dtype=np.int64)

    cap = row_idx.shape[0] * 2 + 16
    pool_idx = np.empty(cap, dtype=np.int64)
    pool_val = np.empty(cap, dtype=np.int64)
    pool_ptr = 0
    max_piv = min(nrows, ncols) + 1
    slot_off = np.empty(max_piv, dtype=np.int64)
    slot_len = np.empty(max_piv, dtype=np.int64)
    slot_col = np.empty(max_piv, dtype=np.int64)
    nslots = 0

    wcap = 16
    cur_idx = np.empty(wcap, dtype=np.int64)
    cur_val = np.empty(wcap, dtype=np.int64)
    scr_idx = np.empty(wcap, dtype=np.int64)
    scr_val = np.empty(wcap, dtype=np.int64)

    for r in range(nrows):
        s = row_start[r]
        e = row_start[r + 1]
        ln = e - s
        if ln > wcap:
            while wcap < ln:
                wcap *= 2
            cur_idx = np.empty(wcap, dtype=np.int64)
            cur_val = np.empty(wcap, dtype=np.int64)
            scr_idx = np.empty(wcap, dtype=np.int64)
            scr_val = np.empty(wcap, dtype=np.int64)
        cur_len = 0
        for i in range(s, e):
            v = row_val[i] % p
            if v != 0:
                cur_idx[cur_len] = row_idx[i]
                cur_val[cur_len] = v
                cur_len += 1

        while cur_len > 0:
            lead = cur_idx[0]
            slot = piv_of_col[lead]
            if slot == -1:
                break
            coef = cur_val[0]
            po = slot_off[slot]
            pl = slot_len[slot]
            need = cur_len + pl
            if need > wcap:
                while wcap < need:
                    wcap *= 2
                n_ci = np.empty(wcap, dtype=np.int64)
                n_cv = np.empty(wcap, dtype=np.int64)
                n_ci[:cur_len] = cur_idx[:cur_len]
                n_cv[:cur_len] = cur_val[:cur_len]
                cur_idx = n_ci
                cur_val = n_cv
                scr_idx = np.empty(wcap, dtype=np.int64)
                scr_val = np.empty(wcap, dtype=np.int64)
            i = 0
            j = 0
            m = 0
            while i < cur_len and j < pl:
                ci = cur_idx[i]
                pj = pool_idx[po + j]
                if ci < pj:
                    scr_idx[m] = ci
                    scr_val[m] = cur_val[i]
                    i += 1
                    m += 1
                elif ci > pj:
                    v = (-coef * pool_val[po + j]) % p
                    if v != 0:
                        scr_idx[m] = pj
                        scr_val[m] = v
                        m += 1
                    j += 1
                else:
                    v = (cur_val[i] - coef * pool_val[po + j]) % p
                    if v != 0:
                        scr_idx[m] = ci
                        scr_val[m] = v
                        m += 1
                    i += 1
                    j += 1
            while i < cur_len:
                scr_idx[m] = cur_idx[i]
                scr_val[m] = cur_val[i]
                i += 1
                m += 1
            while j < pl:
                v = (-coef * pool_val[po + j]) % p
                if v != 0:
                    scr_idx[m] = pool_idx[po + j]
                    scr_val[m] = v
                    m += 1
                j += 1
            tmp_i = cur_idx
            cur_idx = scr_idx
            scr_idx = tmp_i
            tmp_v = cur_val
            cur_val = scr_val
            scr_val = tmp_v
            cur_len = m

        if cur_len == 0:
            continue
        lead = cur_idx[0]
        inv = modinv(cur_val[0], p)
        while pool_ptr + cur_len > cap:
            cap *= 2
            n_pi = np.empty(cap, dtype=np.int64)
            n_pv = np.empty(cap, dtype=np.int64)
            n_pi[:pool_ptr] = pool_idx[:pool_ptr]
            n_pv[:pool_ptr] = pool_val[:pool_ptr]
            pool_idx = n_pi
            pool_val = n_pv
        for i in range(cur_len):
            pool_idx[pool_ptr + i] = cur_idx[i]
            pool_val[pool_ptr + i] = (cur_val[i] * inv) % p
        slot_off[nslots] = pool_ptr
        slot_len[nslots] = cur_len
        slot_col[nslots] = lead
        piv_of_col[lead] = nslots
        pool_ptr += cur_len
        nslots += 1

    # backward pass: descending pivot order, so every pivot column in a tail
    # already has a fully reduced row whose support is its pivot plus
    # non-pivot columns only
    order = np.argsort(slot_col[:nslots])
    red_off = np.empty(max(nslots, 1), dtype=np.int64)
    red_len = np.empty(max(nslots, 1), dtype=np.int64)
    rcap = pool_ptr * 2 + 16
    red_idx = np.empty(rcap, dtype=np.int64)
    red_val = np.empty(rcap, dtype=np.int64)
    red_ptr = 0

    for t in range(nslots - 1, -1, -1):
        slot = order[t]
        po = slot_off[slot]
        pl = slot_len[slot]
        if pl > wcap:
            while wcap < pl:
                wcap *= 2
            cur_idx = np.empty(wcap, dtype=np.int64)
            cur_val = np.empty(wcap, dtype=np.int64)
            scr_idx = np.empty(wcap, dtype=np.int64)
            scr_val = np.empty(wcap, dtype=np.int64)
        cur_len = pl
        for i in range(pl):
            cur_idx[i] = pool_idx[po + i]
            cur_val[i] = pool_val[po + i]

        k = 1
        while k < cur_len:
            colk = cur_idx[k]
            slot2 = piv_of_col[colk]
            if slot2 == -1:
                k += 1
                continue
            coef = cur_val[k]
            ro = red_off[slot2]
            rl = red_len[slot2]
            need = cur_len + rl
            if need > wcap:
                while wcap < need:
                    wcap *= 2
                n_ci = np.empty(wcap, dtype=np.int64)
                n_cv = np.empty(wcap, dtype=np.int64)
                n_ci[:cur_len] = cur_idx[:cur_len]
                n_cv[:cur_len] = cur_val[:cur_len]
                cur_idx = n_ci
                cur_val = n_cv
                scr_idx = np.empty(wcap, dtype=np.int64)
                scr_val = np.empty(wcap, dtype=np.int64)
            i = 0
            j = 0
            m = 0
            while i < cur_len and j < rl:
                ci = cur_idx[i]
                rj = red_idx[ro + j]
                if ci < rj:
                    scr_idx[m] = ci
                    scr_val[m] = cur_val[i]
                    i += 1
                    m += 1
                elif ci > rj:
                    v = (-coef * red_val[ro + j]) % p
                    if v != 0:
                        scr_idx[m] = rj
                        scr_val[m] = v
                        m += 1
                    j += 1
                else:
                    v = (cur_val[i] - coef * red_val[ro + j]) % p
                    if v != 0:
                        scr_idx[m] = ci
                        scr_val[m] = v
                        m += 1
                    i += 1
                    j += 1
            while i < cur_len:
                scr_idx[m] = cur_idx[i]
                scr_val[m] = cur_val[i]
                i += 1
                m += 1
            while j < rl:
                v = (-coef * red_val[ro + j]) % p
                if v != 0:
                    scr_idx[m] = red_idx[ro + j]
                    scr_val[m] = v
                    m += 1
                j += 1
            tmp_i = cur_idx
            cur_idx = scr_idx
            scr_idx = tmp_i
            tmp_v = cur_val
            cur_val = scr_val
            scr_val = tmp_v
            cur_len = m
            # the entry at colk cancelled exactly and nothing at a column
            # below it was introduced, so k stays put

        while red_ptr + cur_len > rcap:
            rcap *= 2
            n_ri = np.empty(rcap, dtype=np.int64)
            n_rv = np.empty(rcap, dtype=np.int64)
            n_ri[:red_ptr] = red_idx[:red_ptr]
            n_rv[:red_ptr] = red_val[:red_ptr]
            red_idx = n_ri
            red_val = n_rv
        for i in range(cur_len):
            red_idx[red_ptr + i] = cur_idx[i]
            red_val[red_ptr + i] = cur_val[i]
        red_off[slot] = red_ptr
        red_len[slot] = cur_len
        red_ptr += cur_len

    piv_cols = np.empty(nslots, dtype=np.int64)
    out_start = np.zeros(nslots + 1, dtype=np.int64)
    for t in range(nslots):
        slot = order[t]
        piv_cols[t] = slot_col[slot]
        out_start[t + 1] = out_start[t] + red_len[slot]
    total = out_start[nslots]
    out_idx = np.empty(total, dtype=np.int64)
    out_val = np.empty(total, dtype=np.int64)
    for t in range(nslots):
        slot = order[t]
        base = out_start[t]
        ro = red_off[slot]
        for i in range(red_len[slot]):
            out_idx[base + i] = red_idx[ro + i]
            out_val[base + i] = red_val[ro + i]
    return piv_cols, out_idx, out_val, out_start
