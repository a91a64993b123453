"""Undirected simple graphs on vertices 1..k and complete-subgraph listing.

A clique here is any complete subgraph with at least one vertex, not only a
maximal one; the singletons and edges are cliques too.  Enumeration returns
every clique exactly once, as an ascending vertex tuple, grouped by size and
lexicographic within each size.

>>> g = Graph(3, [(1, 2), (1, 3)])
>>> [c.vertices for c in enumerate_cliques(g)]
[(1,), (2,), (3,), (1, 2), (1, 3)]
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError


class Graph:
    """Simple undirected graph; vertices are the integers 1..k."""

    __slots__ = ("k", "edges", "_adj")

    def __init__(self, k: int, edges=()):
        k = int(k)
        if k < 1:
            raise UsageError("a graph needs at least one vertex")
        seen = set()
        adj = {v: set() for v in range(1, k + 1)}
        for e in edges:
            a, b = int(e[0]), int(e[1])
            if len(e) != 2 or a == b:
                raise UsageError("edges are unordered pairs of distinct vertices, got %r" % (e,))
            if not (1 <= a <= k and 1 <= b <= k):
                raise UsageError("edge %r outside vertex range 1..%d" % (e, k))
            if a > b:
                a, b = b, a
            seen.add((a, b))
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", frozenset(seen))
        object.__setattr__(self, "_adj", {v: frozenset(s) for v, s in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def vertices(self):
        return range(1, self.k + 1)

    def has_edge(self, a: int, b: int) -> bool:
        if a > b:
            a, b = b, a
        return (a, b) in self.edges

    def neighbors(self, v: int):
        return self._adj[v]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.k == other.k and self.edges == other.edges

    def __hash__(self):
        return hash((self.k, self.edges))

    def __repr__(self):
        return "Graph(%d, %r)" % (self.k, sorted(self.edges))


@dataclass(frozen=True)
class Clique:
    """An ascending tuple of pairwise-adjacent vertices of some host graph."""

    vertices: tuple

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        if not vs:
            raise UsageError("cliques here have at least one vertex")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise UsageError("clique vertices must be strictly ascending, got %r" % (vs,))
        object.__setattr__(self, "vertices", vs)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def validate_against(self, g: Graph):
        for v in self.vertices:
            if not 1 <= v <= g.k:
                raise UsageError("clique vertex %d outside 1..%d" % (v, g.k))
        for i, a in enumerate(self.vertices):
            for b in self.vertices[i + 1:]:
                if not g.has_edge(a, b):
                    raise UsageError("vertices %d,%d are not adjacent" % (a, b))


def enumerate_cliques(g: Graph):
    """All complete subgraphs of g with >= 1 vertex.

    Ordered by size, then lexicographically by vertex tuple.  Grown by
    extending each clique with vertices above its maximum that are adjacent
    to every member, so each clique is produced exactly once.
    """
    by_size = []
    frontier = [(v,) for v in g.vertices()]
    while frontier:
        by_size.append(frontier)
        nxt = []
        for c in frontier:
            common = set(range(c[-1] + 1, g.k + 1))
            for v in c:
                common &= g.neighbors(v)
            for w in sorted(common):
                nxt.append(c + (w,))
        nxt.sort()
        frontier = nxt
    return [Clique(c) for group in by_size for c in group]


def cliques_by_size(g: Graph):
    """{m: list of m-cliques} for every size that occurs."""
    grouped = {}
    for c in enumerate_cliques(g):
        grouped.setdefault(c.size, []).append(c)
    return grouped


def induced_subgraph(g: Graph, vertex_subset):
    """(subgraph, relabeling) for the induced subgraph on vertex_subset.

    The subgraph lives on vertices 1..|subset|; relabeling maps each old
    vertex to its new name, in ascending old-vertex order.
    """
    subset = sorted(set(int(v) for v in vertex_subset))
    if not subset:
        raise UsageError("the induced subgraph needs at least one vertex")
    for v in subset:
        if not 1 <= v <= g.k:
            raise UsageError("vertex %d outside 1..%d" % (v, g.k))
    relabel = {old: new for new, old in enumerate(subset, start=1)}
    edges = [(relabel[a], relabel[b]) for a, b in g.edges
             if a in relabel and b in relabel]
    return Graph(len(subset), edges), relabel
