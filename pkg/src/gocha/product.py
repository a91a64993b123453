"""Graph products: per-vertex group data combined along a graph.

The central formula: the degree-n coefficient of the product's Poincare
series is the sum, over all cliques (i_1 < ... < i_m) of the graph and all
compositions n = n_1 + ... + n_m with every n_j >= 1, of the products
h^{n_1}(vertex i_1) ... h^{n_m}(vertex i_m).  Equivalently, the series is

    1 + sum over cliques of prod_j (H_{i_j} - 1).

poincare_series computes BOTH forms, the first by explicit composition
enumeration and the second by series folds, and refuses to answer if they
ever disagree; the duplication is an internal tripwire, not a convenience.

The gocha series is the reciprocal of the Poincare series at -t.  That step
is justified for vertex groups whose graded algebras are Koszul (free and
surface groups are; user-supplied Poincare data is accepted only with an
explicit declared-Koszul flag and reported as conditional).

>>> spec = FamilySpec(2, Graph(3, [(1, 2), (1, 3)]),
...                   [SurfaceVertex(2)] * 3, 6)
>>> [int(c) for c in poincare_series(spec).coefficients]
[1, 12, 35, 16, 2, 0, 0]
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidVertexError, NotPresentableError, UsageError
from .graph import Graph, enumerate_cliques
from .numtheory import is_prime
from .presentation import QuadraticPresentation, graded_dimensions, quadratic_dual
from .series import TruncatedSeries, ps_inverse, ps_mul


class VertexGroup:
    """Marker base for the per-vertex group descriptions."""

    __slots__ = ()


@dataclass(frozen=True)
class FreeVertex(VertexGroup):
    """Free (pro-p) group of the given rank; Poincare series 1 + rank*t."""

    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise InvalidVertexError("free rank must be >= 0, got %d" % self.rank)


@dataclass(frozen=True)
class SurfaceVertex(VertexGroup):
    """Genus-g orientable surface group; Poincare series 1 + 2g*t + t^2."""

    genus: int

    def __post_init__(self):
        if self.genus < 1:
            raise InvalidVertexError("surface genus must be >= 1, got %d" % self.genus)


@dataclass(frozen=True)
class CyclicTwoVertex(VertexGroup):
    """Order-2 cyclic group; h^n = 1 in every degree.  Only valid at p = 2."""


@dataclass(frozen=True)
class PoincareVertex(VertexGroup):
    """A vertex given only by its Poincare polynomial coefficients.

    The gocha reciprocal formula needs Koszulity, which cannot be checked
    from a polynomial; the koszul flag records the user's declaration, and
    every downstream series built from an undeclared vertex is refused.
    """

    coefficients: tuple
    koszul: bool = False

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if not coeffs or coeffs[0] != 1:
            raise InvalidVertexError("Poincare coefficients must start with 1")
        if any(c < 0 for c in coeffs):
            raise InvalidVertexError("Poincare coefficients must be nonnegative")
        object.__setattr__(self, "coefficients", coeffs)


@dataclass(frozen=True)
class PresentationVertex(VertexGroup):
    """A vertex whose graded algebra is given by a quadratic presentation.

    Its Poincare series is the graded dimension sequence of the quadratic
    dual, computed by the oracle.
    """

    presentation: QuadraticPresentation


@dataclass(frozen=True)
class FamilySpec:
    """A prime, a graph, one VertexGroup per vertex, and a truncation order."""

    p: int
    graph: Graph
    groups: tuple
    truncation: int

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(self.groups))
        if not is_prime(self.p):
            raise UsageError("p must be prime, got %d" % self.p)
        if self.truncation < 1:
            raise UsageError("truncation must be >= 1, got %d" % self.truncation)
        if len(self.groups) != self.graph.k:
            raise UsageError("%d vertex groups for %d vertices"
                             % (len(self.groups), self.graph.k))
        for i, g in enumerate(self.groups, start=1):
            if not isinstance(g, VertexGroup):
                raise InvalidVertexError("vertex %d is not a VertexGroup: %r" % (i, g))
            if isinstance(g, CyclicTwoVertex) and self.p != 2:
                raise InvalidVertexError(
                    "vertex %d is cyclic of order 2, which needs p = 2, not p = %d"
                    % (i, self.p))
            if isinstance(g, PresentationVertex) and g.presentation.p != self.p:
                raise InvalidVertexError(
                    "vertex %d presentation is over p = %d, spec has p = %d"
                    % (i, g.presentation.p, self.p))


class _UnboundedType:
    """Sentinel for cohomological dimension with no visible top degree."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNBOUNDED"


UNBOUNDED = _UnboundedType()


@lru_cache(maxsize=None)
def _dual_dims_series(pres: QuadraticPresentation, N: int) -> TruncatedSeries:
    dims = graded_dimensions(quadratic_dual(pres), N)
    return TruncatedSeries(dims.dims, N)


def vertex_poincare(v: VertexGroup, p: int, N: int) -> TruncatedSeries:
    """The vertex group's Poincare series truncated at N."""
    if isinstance(v, FreeVertex):
        return TruncatedSeries([1, v.rank] if N >= 1 else [1], N)
    if isinstance(v, SurfaceVertex):
        return TruncatedSeries(([1, 2 * v.genus, 1])[:N + 1], N)
    if isinstance(v, CyclicTwoVertex):
        if p != 2:
            raise InvalidVertexError("cyclic group of order 2 needs p = 2, not p = %d" % p)
        return TruncatedSeries([1] * (N + 1), N)
    if isinstance(v, PoincareVertex):
        return TruncatedSeries(v.coefficients[:N + 1], N)
    if isinstance(v, PresentationVertex):
        return _dual_dims_series(v.presentation, N)
    raise InvalidVertexError("unknown vertex group %r" % (v,))


def _vertex_degree(v: VertexGroup, p: int, N: int):
    """Top nonzero degree of the vertex Poincare series, or UNBOUNDED.

    Closed forms (free, surface, explicit polynomial) have a known degree
    regardless of N.  A presentation vertex only shows a window of length N:
    its series counts as terminating only if a zero tail is visible inside
    the window.
    """
    if isinstance(v, FreeVertex):
        return 1 if v.rank > 0 else 0
    if isinstance(v, SurfaceVertex):
        return 2
    if isinstance(v, CyclicTwoVertex):
        return UNBOUNDED
    if isinstance(v, PoincareVertex):
        deg = 0
        for n, c in enumerate(v.coefficients):
            if c != 0:
                deg = n
        return deg
    if isinstance(v, PresentationVertex):
        series = _dual_dims_series(v.presentation, N)
        deg = series.polynomial_degree()
        if deg is None:
            return 0
        if deg >= N:
            return UNBOUNDED
        return deg
    raise InvalidVertexError("unknown vertex group %r" % (v,))


def _compositions_into(out, h_lists, N):
    """Add, for each n, the composition sums over these vertices to out[n]."""
    m = len(h_lists)
    top = []
    for h in h_lists:
        deg = 0
        for i in range(1, len(h)):
            if h[i] != 0:
                deg = i
        top.append(deg)
    if any(t == 0 for t in top):
        return

    def go(j, used, prod):
        budget = N - used - (m - j - 1)
        h = h_lists[j]
        for nj in range(1, min(top[j], budget) + 1):
            c = h[nj]
            if c == 0:
                continue
            if j == m - 1:
                out[used + nj] += prod * c
            else:
                go(j + 1, used + nj, prod * c)

    go(0, 0, Fraction(1))


def poincare_series(spec: FamilySpec) -> TruncatedSeries:
    """Poincare series of the graph product, by two independent algorithms.

    A disagreement between the composition enumeration and the series-fold
    evaluation is an implementation fault, never user error, hence the
    RuntimeError.
    """
    N = spec.truncation
    series = [vertex_poincare(v, spec.p, N) for v in spec.groups]
    cliques = enumerate_cliques(spec.graph)

    one = TruncatedSeries.one(N)
    total_fold = one
    for c in cliques:
        prod = None
        for v in c.vertices:
            factor = series[v - 1] - one
            prod = factor if prod is None else ps_mul(prod, factor)
        total_fold = total_fold + prod

    direct = [Fraction(0)] * (N + 1)
    direct[0] = Fraction(1)
    for c in cliques:
        _compositions_into(direct, [series[v - 1].coefficients for v in c.vertices], N)
    total_direct = TruncatedSeries(direct, N)

    if total_direct != total_fold:
        raise RuntimeError(
            "internal disagreement between the composition and fold "
            "evaluations of the Poincare series: %r vs %r"
            % (total_direct, total_fold))
    return total_fold


def _check_declared_koszul(spec: FamilySpec):
    for i, v in enumerate(spec.groups, start=1):
        if isinstance(v, PoincareVertex) and not v.koszul:
            raise UsageError(
                "vertex %d gives only a Poincare polynomial and is not "
                "declared Koszul; the gocha reciprocal is unjustified" % i)


def is_conditional(spec: FamilySpec) -> bool:
    """True when results rest on a user-declared Koszulity flag."""
    return any(isinstance(v, PoincareVertex) and v.koszul for v in spec.groups)


def gocha_series(spec: FamilySpec) -> TruncatedSeries:
    """1 / poincare_series(-t), the graded dimension series of the product."""
    _check_declared_koszul(spec)
    return ps_inverse(poincare_series(spec).at_minus_t())


def _vertex_generators(v: VertexGroup):
    """(count, relations) of the vertex's quadratic presentation shape.

    Relations are lists of (a, b, coeff_sign) triples with coeff_sign in
    {+1, -1}, local 1-indexed generators; -1 is reduced mod p by the caller.
    """
    if isinstance(v, FreeVertex):
        return v.rank, []
    if isinstance(v, SurfaceVertex):
        g = v.genus
        rel = []
        for j in range(1, g + 1):
            rel.append((j, g + j, 1))
            rel.append((g + j, j, -1))
        return 2 * g, [rel]
    if isinstance(v, PresentationVertex):
        return v.presentation.d, [list(row) for row in v.presentation.relations]
    raise NotPresentableError(
        "vertex %r has no quadratic presentation" % (v,))


def assemble_presentation(spec: FamilySpec) -> QuadraticPresentation:
    """The product's quadratic presentation: all vertex generators, vertex
    relations, and one commutator per edge and cross-generator pair.

    Generators are labeled (vertex, index), vertices ascending, and the
    surface relator for genus g pairs generator j with generator g + j.
    """
    p = spec.p
    offsets, ends = [], []
    relations = []
    labels = []
    total = 0
    for i, v in enumerate(spec.groups, start=1):
        d_i, rels_i = _vertex_generators(v)
        offsets.append(total)
        for rel in rels_i:
            relations.append([(total + a, total + b, c % p) for a, b, c in rel])
        labels.extend((i, j) for j in range(1, d_i + 1))
        total += d_i
        ends.append(total)
    for a, b in sorted(spec.graph.edges):
        for ga in range(offsets[a - 1] + 1, ends[a - 1] + 1):
            for gb in range(offsets[b - 1] + 1, ends[b - 1] + 1):
                relations.append([(ga, gb, 1), (gb, ga, p - 1)])
    return QuadraticPresentation(p, total, relations, labels=tuple(labels))


def dual_family(spec: FamilySpec) -> QuadraticPresentation:
    """The dual presentation assembled directly from the family:
    per-vertex quadratic duals, anticommutators across every vertex pair,
    and both plain cross-products for every non-edge pair.

    Its relation span equals the orthogonal complement of the assembled
    presentation's, which the tests assert; here it is built from the
    family, not by complementing.
    """
    p = spec.p
    offsets, ends = [], []
    relations = []
    labels = []
    total = 0
    for i, v in enumerate(spec.groups, start=1):
        d_i, rels_i = _vertex_generators(v)
        vertex_pres = QuadraticPresentation(p, d_i, rels_i)
        for row in quadratic_dual(vertex_pres).relations:
            relations.append([(total + a, total + b, c) for a, b, c in row])
        offsets.append(total)
        labels.extend((i, j) for j in range(1, d_i + 1))
        total += d_i
        ends.append(total)
    k = spec.graph.k
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            is_edge = spec.graph.has_edge(a, b)
            for ga in range(offsets[a - 1] + 1, ends[a - 1] + 1):
                for gb in range(offsets[b - 1] + 1, ends[b - 1] + 1):
                    relations.append([(ga, gb, 1), (gb, ga, 1)])
                    if not is_edge:
                        relations.append([(ga, gb, 1)])
                        relations.append([(gb, ga, 1)])
    return QuadraticPresentation(p, total, relations, labels=tuple(labels))


def cohomological_dimension(spec: FamilySpec):
    """Top degree of the Poincare series as a polynomial: the maximum over
    cliques of the summed vertex degrees.  UNBOUNDED when some vertex series
    never terminates inside the truncation window (e.g. cyclic of order 2).

    Computed from the intrinsic vertex degrees, so the answer is exact even
    when it exceeds the truncation order.
    """
    degs = []
    for v in spec.groups:
        deg = _vertex_degree(v, spec.p, spec.truncation)
        if deg is UNBOUNDED:
            return UNBOUNDED
        degs.append(deg)
    best = 0
    for c in enumerate_cliques(spec.graph):
        best = max(best, sum(degs[v - 1] for v in c.vertices))
    return best
