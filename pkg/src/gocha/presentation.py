"""Quadratic algebras over GF(p): relation spaces, the graded-dimension
oracle, quadratic duals, and a numeric Koszulity check.

A presentation is d generators x_1..x_d and a set of degree-2 relations,
each a combination of ordered products x_a x_b with coefficients mod p.
Relations are canonicalized on construction to the reduced row-echelon basis
of their span inside the d^2-dimensional degree-2 space, so two presentations
with the same relation span compare equal and the relation count r is the
rank, never an overcount.

graded_dimensions is the brute-force oracle: it computes dim of degree n of
the quotient algebra by exact elimination mod p, degree by degree.  Instead
of re-echelonizing the full d^n word space each time, it carries the quotient
forward: degree n is built inside basis(degree n-1) (x) V, of dimension
c_{n-1} * d, and the relation placements

    u * (sum r_ab x_a x_b),   u running over basis(degree n-2)

are expanded through the rewrite table produced at degree n-1 (each pivot
word of that stage rewrites into later basis words).  The span of those rows
is the degree-n layer of the two-sided ideal expressed in the reduced
coordinates, so the quotient dimension and the new rewrite table come out of
one sparse echelon pass with c_{n-1} * d columns rather than d^n.

>>> pres = QuadraticPresentation(2, 2, [{(1, 2): 1, (2, 1): 1}])
>>> graded_dimensions(pres, 5).dims
(1, 2, 3, 4, 5, 6)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gfp
from .errors import ResourceCapError, UsageError
from .numtheory import is_prime

#: graded_dimensions refuses degrees needing more echelon columns than this.
DEFAULT_COLUMN_CAP = 4_000_000
#: ... or more relation-placement rows than this.
DEFAULT_ROW_CAP = 1_000_000


class QuadraticPresentation:
    """d generators over GF(p) with canonicalized quadratic relations.

    relations: each input relation is a mapping {(a, b): coeff} or an
    iterable of (a, b, coeff) triples, 1-indexed generator pairs, coeff taken
    mod p.  Stored canonically as the reduced row-echelon basis of the span,
    each row a tuple of (a, b, coeff) triples sorted by (a, b), rows ordered
    by pivot.  Equality ignores labels.
    """

    __slots__ = ("p", "d", "relations", "labels")

    def __init__(self, p: int, d: int, relations=(), labels=None):
        p = int(p)
        d = int(d)
        if not is_prime(p):
            raise UsageError("p must be prime, got %d" % p)
        if d < 0:
            raise UsageError("generator count must be >= 0, got %d" % d)
        if labels is not None:
            labels = tuple(tuple(lbl) for lbl in labels)
            if len(labels) != d:
                raise UsageError("%d labels for %d generators" % (len(labels), d))

        raw_cols = []
        raw_vals = []
        starts = [0]
        for rel in relations:
            items = rel.items() if hasattr(rel, "items") else [(t[:2], t[2]) for t in rel]
            for (a, b), coeff in items:
                a, b = int(a), int(b)
                if not (1 <= a <= d and 1 <= b <= d):
                    raise UsageError(
                        "relation term (%d,%d) outside generators 1..%d" % (a, b, d))
                raw_cols.append((a - 1) * d + (b - 1))
                raw_vals.append(int(coeff) % p)
            starts.append(len(raw_cols))

        # normalize each row, then echelonize the whole stack
        idx_parts, val_parts, row_start = [], [], [0]
        for i in range(len(starts) - 1):
            cols, vals = gfp.merge_duplicate_columns(
                raw_cols[starts[i]:starts[i + 1]],
                raw_vals[starts[i]:starts[i + 1]], p)
            idx_parts.append(cols)
            val_parts.append(vals)
            row_start.append(row_start[-1] + cols.shape[0])
        row_idx = (np.concatenate(idx_parts) if idx_parts
                   else np.empty(0, dtype=np.int64))
        row_val = (np.concatenate(val_parts) if val_parts
                   else np.empty(0, dtype=np.int64))
        _, out_idx, out_val, out_start = gfp.rref_sparse(
            row_idx, row_val, np.array(row_start, dtype=np.int64),
            max(d * d, 1), p)

        canon = []
        for t in range(out_start.shape[0] - 1):
            s, e = out_start[t], out_start[t + 1]
            canon.append(tuple(
                (int(c) // d + 1, int(c) % d + 1, int(v))
                for c, v in zip(out_idx[s:e], out_val[s:e])))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "relations", tuple(canon))
        object.__setattr__(self, "labels", labels)

    def __setattr__(self, name, value):
        raise AttributeError("QuadraticPresentation is immutable")

    @property
    def r(self) -> int:
        return len(self.relations)

    def relation_matrix(self):
        """CSR arrays (idx, val, start) of the canonical relation rows over
        the d^2 columns (a-1)*d + (b-1)."""
        idx, val, start = [], [], [0]
        for row in self.relations:
            for a, b, coeff in row:
                idx.append((a - 1) * self.d + (b - 1))
                val.append(coeff)
            start.append(len(idx))
        return (np.array(idx, dtype=np.int64), np.array(val, dtype=np.int64),
                np.array(start, dtype=np.int64))

    def __eq__(self, other):
        if not isinstance(other, QuadraticPresentation):
            return NotImplemented
        return (self.p, self.d, self.relations) == (other.p, other.d, other.relations)

    def __hash__(self):
        return hash((self.p, self.d, self.relations))

    def __repr__(self):
        return "QuadraticPresentation(p=%d, d=%d, r=%d)" % (self.p, self.d, self.r)


@dataclass(frozen=True)
class GradedDimensions:
    """dims[n] = dimension of degree n of the quotient algebra, n = 0..N."""

    p: int
    dims: tuple

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(c) for c in self.dims))
        if self.dims and self.dims[0] != 1:
            raise UsageError("degree 0 always has dimension 1")

    def __getitem__(self, n):
        return self.dims[n]

    def __len__(self):
        return len(self.dims)


@dataclass(frozen=True)
class KoszulityReport:
    passed: bool
    first_failure: int | None
    dims: GradedDimensions
    dual_dims: GradedDimensions


def _initial_rewrite_table(d):
    # degree 1: basis(E_0) = {1}, every 1 * x_a is already a basis word
    return (np.arange(d, dtype=np.int64), np.ones(d, dtype=np.int64),
            np.arange(d + 1, dtype=np.int64))


def _build_placement_rows(pres, exp, c_prev2, c_prev1, p):
    """Rows spanning degree-n ideal layer in basis(E_{n-1}) (x) V coords.

    One row per (u in basis(E_{n-2}), relation); u * x_a is expanded through
    the rewrite table exp, then tensored with x_b.
    """
    d = pres.d
    exp_idx, exp_val, exp_start = exp
    nrel = pres.r
    nrows = c_prev2 * nrel
    u = np.arange(c_prev2, dtype=np.int64)

    part_rows, part_cols, part_vals = [], [], []
    for rid, rel in enumerate(pres.relations):
        for a, b, coeff in rel:
            er = u * d + (a - 1)
            seg_start = exp_start[er]
            seg_len = exp_start[er + 1] - seg_start
            total = int(seg_len.sum())
            if total == 0:
                continue
            shifts = np.repeat(np.cumsum(seg_len) - seg_len, seg_len)
            gather = np.repeat(seg_start, seg_len) + (np.arange(total) - shifts)
            w = exp_idx[gather]
            v = exp_val[gather]
            part_rows.append(np.repeat(u * nrel + rid, seg_len))
            part_cols.append(w * d + (b - 1))
            part_vals.append((v * coeff) % p)

    if not part_rows:
        return (np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64),
                np.zeros(nrows + 1, dtype=np.int64))
    rows = np.concatenate(part_rows)
    cols = np.concatenate(part_cols)
    vals = np.concatenate(part_vals)

    order = np.lexsort((cols, rows))
    rows, cols, vals = rows[order], cols[order], vals[order]
    boundary = np.empty(rows.shape[0], dtype=bool)
    boundary[0] = True
    boundary[1:] = (rows[1:] != rows[:-1]) | (cols[1:] != cols[:-1])
    starts = np.flatnonzero(boundary)
    sums = np.add.reduceat(vals, starts) % p
    rows, cols = rows[starts], cols[starts]
    keep = sums != 0
    rows, cols, vals = rows[keep], cols[keep], sums[keep]

    row_start = np.zeros(nrows + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=nrows), out=row_start[1:])
    return cols, vals, row_start


def _next_rewrite_table(piv_cols, out_idx, out_val, out_start, ncols, p):
    """Rewrite table for the next stage from the reduced echelon rows.

    Column j of this stage (a word of E_{n-1} (x) V) maps to: itself renamed,
    if j is not a pivot; minus the reduced row tail, renamed, if it is.
    """
    is_piv = np.zeros(ncols, dtype=bool)
    is_piv[piv_cols] = True
    new_index = np.cumsum(~is_piv) - 1

    lens = np.ones(ncols, dtype=np.int64)
    row_lens = out_start[1:] - out_start[:-1]
    lens[piv_cols] = row_lens - 1
    exp_start = np.zeros(ncols + 1, dtype=np.int64)
    np.cumsum(lens, out=exp_start[1:])
    total = int(exp_start[-1])
    exp_idx = np.empty(total, dtype=np.int64)
    exp_val = np.empty(total, dtype=np.int64)

    nonpiv = np.flatnonzero(~is_piv)
    exp_idx[exp_start[nonpiv]] = new_index[nonpiv]
    exp_val[exp_start[nonpiv]] = 1

    nnz = out_idx.shape[0]
    if nnz:
        # drop the leading (pivot) entry of every reduced row, scatter the rest
        lead = np.zeros(nnz, dtype=bool)
        lead[out_start[:-1]] = True
        src = np.flatnonzero(~lead)
        rowids = np.repeat(np.arange(piv_cols.shape[0]), row_lens - 1)
        within = src - out_start[rowids] - 1
        dst = exp_start[piv_cols[rowids]] + within
        exp_idx[dst] = new_index[out_idx[src]]
        exp_val[dst] = (p - out_val[src]) % p
    return exp_idx, exp_val, exp_start


def graded_dimensions(pres: QuadraticPresentation, N: int,
                      column_cap: int = DEFAULT_COLUMN_CAP,
                      row_cap: int = DEFAULT_ROW_CAP,
                      stop_before_cap: bool = False) -> GradedDimensions:
    """Dimensions c_0..c_N of the quotient algebra, by exact elimination.

    Refuses (ResourceCapError naming the first unreachable degree) when some
    degree would need more than column_cap echelon columns or row_cap
    relation rows; with stop_before_cap the degrees already computed are
    returned instead.
    """
    if N < 0:
        raise UsageError("N must be >= 0")
    p, d = pres.p, pres.d
    dims = [1]
    if N >= 1:
        dims.append(d)
    exp = _initial_rewrite_table(d)
    for n in range(2, N + 1):
        c_prev1, c_prev2 = dims[n - 1], dims[n - 2]
        ncols = c_prev1 * d
        nrows = c_prev2 * pres.r
        if ncols > column_cap or nrows > row_cap:
            if stop_before_cap:
                return GradedDimensions(p, dims)
            if ncols > column_cap:
                raise ResourceCapError(
                    n, "%d columns exceed the cap of %d" % (ncols, column_cap))
            raise ResourceCapError(
                n, "%d rows exceed the cap of %d" % (nrows, row_cap))
        row_idx, row_val, row_start = _build_placement_rows(
            pres, exp, c_prev2, c_prev1, p)
        piv_cols, out_idx, out_val, out_start = gfp.rref_sparse(
            row_idx, row_val, row_start, max(ncols, 1), p)
        rank = piv_cols.shape[0]
        dims.append(ncols - rank)
        exp = _next_rewrite_table(piv_cols, out_idx, out_val, out_start,
                                  max(ncols, 1), p)
    return GradedDimensions(p, dims)


def quadratic_dual(pres: QuadraticPresentation) -> QuadraticPresentation:
    """Presentation whose relation span is the orthogonal complement of
    span(S) under the coordinate pairing <x_a x_b, X_c X_d> = delta delta.

    From the reduced echelon rows e_piv + sum A[t,f] e_f (f non-pivot), the
    complement has basis e_f - sum_t A[t,f] e_piv(t), one per non-pivot
    column, giving exactly d^2 - r relations.
    """
    p, d = pres.p, pres.d
    n2 = d * d
    piv = []
    tails = {}  # free column -> list of (pivot col, coeff)
    for row in pres.relations:
        cols = [(a - 1) * d + (b - 1) for a, b, _ in row]
        vals = [c for _, _, c in row]
        pc = cols[0]
        piv.append(pc)
        for col, val in zip(cols[1:], vals[1:]):
            tails.setdefault(col, []).append((pc, val))
    piv_set = set(piv)

    duals = []
    for f in range(n2):
        if f in piv_set:
            continue
        terms = [(f // d + 1, f % d + 1, 1)]
        for pc, val in tails.get(f, ()):
            terms.append((pc // d + 1, pc % d + 1, (p - val) % p))
        duals.append(terms)
    return QuadraticPresentation(p, d, duals, labels=pres.labels)


def koszulity_test(pres: QuadraticPresentation, N: int,
                   column_cap: int = DEFAULT_COLUMN_CAP,
                   row_cap: int = DEFAULT_ROW_CAP) -> KoszulityReport:
    """Check sum_{i+j=n} (-1)^j c_i(pres) c_j(dual) = 0 for 1 <= n <= N.

    Failing the check rules Koszulity out; passing it is necessary, not
    sufficient.  first_failure is the smallest failing n, or None.
    """
    dual = quadratic_dual(pres)
    dims = graded_dimensions(pres, N, column_cap, row_cap)
    dual_dims = graded_dimensions(dual, N, column_cap, row_cap)
    first = None
    for n in range(1, N + 1):
        acc = 0
        for j in range(n + 1):
            acc += (-1) ** j * dims[n - j] * dual_dims[j]
        if acc != 0:
            first = n
            break
    return KoszulityReport(first is None, first, dims, dual_dims)
