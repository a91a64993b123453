"""Clique enumeration and induced subgraphs.

The enumerator promises every complete subgraph with at least one vertex,
exactly once, ordered by size then lexicographically.  Random graphs are
cross-checked against a brute-force scan over all vertex subsets.
"""

from __future__ import annotations

import itertools
import random

import pytest

from gocha.errors import UsageError
from gocha.graph import (
    Clique,
    Graph,
    cliques_by_size,
    enumerate_cliques,
    induced_subgraph,
)


def brute_cliques(g):
    out = []
    for size in range(1, g.k + 1):
        for subset in itertools.combinations(g.vertices(), size):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(subset, 2)):
                out.append(subset)
    return out


def random_graph(rng, max_k=6):
    k = rng.randint(1, max_k)
    edges = [(a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1)
             if rng.random() < 0.5]
    return Graph(k, edges)


def test_path_graph_cliques():
    # the 2--1--3 path: three vertices, two edges, no triangle
    g = Graph(3, [(1, 2), (1, 3)])
    got = [c.vertices for c in enumerate_cliques(g)]
    assert got == [(1,), (2,), (3,), (1, 2), (1, 3)]


def test_triangle_cliques():
    g = Graph(3, [(1, 2), (1, 3), (2, 3)])
    got = [c.vertices for c in enumerate_cliques(g)]
    assert got == [(1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3)]


def test_edgeless_graph_has_only_singletons():
    g = Graph(4)
    assert [c.vertices for c in enumerate_cliques(g)] == [(1,), (2,), (3,), (4,)]


def test_complete_graph_clique_count():
    # K5 has 2^5 - 1 = 31 nonempty complete subgraphs
    g = Graph(5, [(a, b) for a in range(1, 6) for b in range(a + 1, 6)])
    cliques = enumerate_cliques(g)
    assert len(cliques) == 31
    by_size = cliques_by_size(g)
    from math import comb
    assert {m: len(cs) for m, cs in by_size.items()} == \
        {m: comb(5, m) for m in range(1, 6)}


def test_random_graphs_match_brute_force():
    rng = random.Random(44)
    for _ in range(40):
        g = random_graph(rng)
        got = [c.vertices for c in enumerate_cliques(g)]
        expected = brute_cliques(g)
        assert sorted(got) == sorted(expected)
        assert len(set(got)) == len(got)  # no duplicates
        # promised order: size first, then lexicographic
        assert got == sorted(got, key=lambda c: (len(c), c))


def test_clique_validation():
    g = Graph(3, [(1, 2)])
    Clique((1, 2)).validate_against(g)
    with pytest.raises(UsageError):
        Clique((1, 3)).validate_against(g)  # not adjacent
    with pytest.raises(UsageError):
        Clique((1, 4)).validate_against(g)  # out of range
    with pytest.raises(UsageError):
        Clique((2, 1))  # not ascending
    with pytest.raises(UsageError):
        Clique(())


def test_graph_validation():
    with pytest.raises(UsageError):
        Graph(0)
    with pytest.raises(UsageError):
        Graph(3, [(1, 1)])  # self-loop
    with pytest.raises(UsageError):
        Graph(3, [(1, 4)])  # out of range
    # duplicate and reversed edges collapse
    g = Graph(3, [(2, 1), (1, 2)])
    assert g.edges == frozenset({(1, 2)})
    assert g.has_edge(2, 1)
    assert g.neighbors(1) == frozenset({2})


def test_induced_subgraph_relabels_consistently():
    rng = random.Random(55)
    for _ in range(30):
        g = random_graph(rng)
        size = rng.randint(1, g.k)
        subset = rng.sample(list(g.vertices()), size)
        sub, relabel = induced_subgraph(g, subset)
        assert sub.k == len(set(subset))
        assert sorted(relabel.values()) == list(range(1, sub.k + 1))
        # adjacency preserved both ways
        for a, b in itertools.combinations(sorted(set(subset)), 2):
            assert g.has_edge(a, b) == sub.has_edge(relabel[a], relabel[b])
    with pytest.raises(UsageError):
        induced_subgraph(Graph(3), [])
    with pytest.raises(UsageError):
        induced_subgraph(Graph(3), [5])
