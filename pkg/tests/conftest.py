"""Shared brute-force oracles.  None of these reuse library search code: they
work from vertex orderings and plain itertools enumeration."""

import itertools
from functools import lru_cache

import networkx as nx
import pytest

from boxikit.graph import LabeledGraph


def from_nx(h) -> LabeledGraph:
    nodes = sorted(h.nodes())
    return LabeledGraph.from_edges([f"v{u}" for u in nodes], [(f"v{a}", f"v{b}") for a, b in h.edges()])


@lru_cache(maxsize=None)
def atlas(max_n: int = 7) -> tuple:
    """Every graph on 1..max_n vertices up to isomorphism (networkx atlas)."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g() if 1 <= h.number_of_nodes() <= max_n)


def _ordering_exists(adj, unit: bool) -> bool:
    """Backtracking over vertex orders u < v < w with uw an edge forcing uv
    (and vw too, for unit interval graphs)."""
    n = len(adj)

    def ok(order, w):
        for a in range(len(order)):
            u = order[a]
            if not adj[u][w]:
                continue
            for v in order[a + 1 :]:
                if not adj[u][v] or (unit and not adj[v][w]):
                    return False
        return True

    def rec(order, left):
        if not left:
            return True
        for w in sorted(left):
            if ok(order, w) and rec(order + [w], left - {w}):
                return True
        return False

    return rec([], frozenset(range(n)))


def brute_interval(g: LabeledGraph) -> bool:
    return _ordering_exists(g.adj.tolist(), unit=False)


def brute_unit_interval(g: LabeledGraph) -> bool:
    return _ordering_exists(g.adj.tolist(), unit=True)


def brute_parameter(g: LabeledGraph, unit: bool) -> int:
    """Fewest (unit) interval supergraphs intersecting to g, over every
    supergraph rather than only minimal ones."""
    non_edges = g.non_edges()
    if not non_edges:
        return 0
    adj = g.adj.tolist()
    good = []
    for mask in range(1 << len(non_edges)):
        a = [row[:] for row in adj]
        for b, (i, j) in enumerate(non_edges):
            if (mask >> b) & 1:
                a[i][j] = a[j][i] = True
        if _ordering_exists(a, unit):
            good.append(mask)
    for k in range(1, len(non_edges) + 1):
        for combo in itertools.combinations(good, k):
            both = (1 << len(non_edges)) - 1
            for m in combo:
                both &= m
            if both == 0:
                return k
    raise AssertionError("no cover found")


def brute_isomorphic(g1: LabeledGraph, g2: LabeledGraph) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    e2 = {frozenset(p) for p in g2.edges()}
    e1 = g1.edges()
    return any(all(frozenset((perm[i], perm[j])) in e2 for i, j in e1) for perm in itertools.permutations(range(g1.n)))


@pytest.fixture
def small_atlas():
    return atlas(7)
