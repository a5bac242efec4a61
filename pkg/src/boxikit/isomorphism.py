"""Graph isomorphism by colour refinement plus individualization backtracking.

Both graphs are refined together as one disjoint union, so a colour means
the same thing on either side and class sizes can be compared directly.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError
from .graph import Label, LabeledGraph

DEFAULT_MAX_VERTICES = 300


def _refine(adj: np.ndarray, colors: np.ndarray) -> np.ndarray:
    n_total = adj.shape[0]
    while True:
        k = int(colors.max()) + 1
        onehot = np.zeros((n_total, k), dtype=np.float64)
        onehot[np.arange(n_total), colors] = 1.0
        counts = (adj @ onehot).astype(np.int64)
        signature = np.concatenate([colors[:, None], counts], axis=1)
        _, new = np.unique(signature, axis=0, return_inverse=True)
        new = new.reshape(-1).astype(np.int64)
        if new.max() == colors.max():
            return new
        colors = new


def are_isomorphic(
    g1: LabeledGraph, g2: LabeledGraph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> dict[Label, Label] | None:
    """A bijection ``V(g1) -> V(g2)`` preserving adjacency both ways, or None."""
    if max(g1.n, g2.n) > max_vertices:
        raise CapacityError(
            f"isomorphism search capped at {max_vertices} vertices", n1=g1.n, n2=g2.n
        )
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return None
    if not np.array_equal(np.sort(g1.degrees()), np.sort(g2.degrees())):
        return None
    n = g1.n
    if n == 0:
        return {}
    union = np.zeros((2 * n, 2 * n), dtype=np.float64)
    union[:n, :n] = g1.adj
    union[n:, n:] = g2.adj
    perm = _search(union, np.zeros(2 * n, dtype=np.int64), n, g1.adj, g2.adj)
    if perm is None:
        return None
    return {g1.vertices[i]: g2.vertices[int(perm[i])] for i in range(n)}


def _search(union, colors, n, adj1, adj2):
    colors = _refine(union, colors)
    left, right = colors[:n], colors[n:]
    k = int(colors.max()) + 1
    sizes = np.bincount(left, minlength=k)
    if not np.array_equal(sizes, np.bincount(right, minlength=k)):
        return None
    if np.all(sizes <= 1):
        perm = np.empty(n, dtype=np.int64)
        where = np.empty(k, dtype=np.int64)
        where[right] = np.arange(n)
        perm[:] = where[left]
        if np.array_equal(adj1, adj2[np.ix_(perm, perm)]):
            return perm
        return None
    target = int(np.argmin(np.where(sizes > 1, sizes, n + 1)))
    u = int(np.flatnonzero(left == target)[0])
    fresh = k
    for v in np.flatnonzero(right == target):
        trial = colors.copy()
        trial[u] = fresh
        trial[n + int(v)] = fresh
        found = _search(union, trial, n, adj1, adj2)
        if found is not None:
            return found
    return None


def is_isomorphism(g1: LabeledGraph, g2: LabeledGraph, mapping: dict[Label, Label]) -> bool:
    if sorted(mapping) != sorted(g1.vertices) or sorted(mapping.values()) != sorted(g2.vertices):
        return False
    return g1.relabel(mapping).same_edges(g2)
