"""Interval and unit interval graph recognition, plus interval models.

Recognition uses the chordal + asteroidal-triple-free characterization of
interval graphs and the interval + claw-free characterization of unit
interval graphs.  Models are built from an interval vertex ordering: an
order in which ``u < v < w`` and ``uw`` an edge force ``uv`` to be an edge.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _kernels
from ._accel import NUMBA_ENABLED
from .errors import CapacityError
from .graph import Interval, LabeledGraph


def graph_rows(g: LabeledGraph):
    """Bitmask rows: an int64 array for small graphs, else Python ints."""
    if g.n <= _kernels.MAX_JIT_VERTICES:
        weights = np.left_shift(np.int64(1), np.arange(g.n, dtype=np.int64))
        return (g.adj.astype(np.int64) * weights[None, :]).sum(axis=1).astype(np.int64)
    return [sum(1 << int(u) for u in np.flatnonzero(row)) for row in g.adj]


def _run(kernel, g: LabeledGraph):
    rows = graph_rows(g)
    if NUMBA_ENABLED and isinstance(rows, np.ndarray):
        return bool(kernel(rows, g.n))
    return bool(_kernels.pure(kernel.__name__)(rows, g.n))


def is_chordal(g: LabeledGraph) -> bool:
    return _run(_kernels.is_chordal, g)


def has_asteroidal_triple(g: LabeledGraph) -> bool:
    return _run(_kernels.has_asteroidal_triple, g)


def has_induced_claw(g: LabeledGraph) -> bool:
    return _run(_kernels.has_claw, g)


def is_interval_graph(g: LabeledGraph) -> bool:
    return _run(_kernels.is_interval, g)


def is_unit_interval_graph(g: LabeledGraph) -> bool:
    return _run(_kernels.is_unit_interval, g)


def interval_ordering(g: LabeledGraph, max_states: int = 200_000) -> list[int] | None:
    """Vertex indices in an interval ordering of ``g``, or None if none exists.

    Depth-first search over (placed set, open set) states, where a placed
    vertex stays open while it is adjacent to everything placed after it.
    A vertex may be placed next only if all its placed neighbours are open.
    """
    n = g.n
    rows = [sum(1 << int(u) for u in np.flatnonzero(row)) for row in g.adj]
    full = (1 << n) - 1
    failed: set[tuple[int, int]] = set()
    order: list[int] = []
    # low-degree vertices first: the ends of an interval model are simplicial
    by_degree = sorted(range(n), key=lambda v: (bin(rows[v]).count("1"), v))

    def extend(placed: int, open_: int) -> bool:
        if placed == full:
            return True
        if (placed, open_) in failed:
            return False
        if len(failed) > max_states:
            raise CapacityError("interval ordering search exceeded its state cap", states=len(failed))
        for w in by_degree:
            bit = 1 << w
            if placed & bit or rows[w] & placed & ~open_:
                continue
            order.append(w)
            if extend(placed | bit, (open_ & rows[w]) | bit):
                return True
            order.pop()
        failed.add((placed, open_))
        return False

    return list(order) if extend(0, 0) else None


def interval_model(g: LabeledGraph) -> dict[str, Interval] | None:
    """Closed integer intervals whose intersection graph is exactly ``g``."""
    order = interval_ordering(g)
    if order is None:
        return None
    pos = {v: i for i, v in enumerate(order)}
    model = {}
    for v in order:
        right = pos[v]
        for u in np.flatnonzero(g.adj[v]):
            right = max(right, pos[int(u)])
        model[g.vertices[v]] = Interval(Fraction(pos[v]), Fraction(right))
    return model
