"""Bitmask recognition kernels.

A graph on ``n`` vertices is passed as ``rows``: ``rows[v]`` has bit ``u``
set iff ``uv`` is an edge.  For ``n <= 62`` rows is an ``int64`` array and
the jitted kernels apply; larger graphs go through ``pure(name)`` with a
list of Python ints, which the same source handles unchanged.
"""

import types

import numpy as np

from ._accel import jit

MAX_JIT_VERTICES = 62


@jit
def is_chordal(rows, n):
    # maximum cardinality search, then the parent test on the reversed order
    numbered = np.zeros(n, np.bool_)
    weight = np.zeros(n, np.int64)
    order = np.empty(n, np.int64)
    for i in range(n - 1, -1, -1):
        best = -1
        best_w = -1
        for v in range(n):
            if not numbered[v] and weight[v] > best_w:
                best = v
                best_w = weight[v]
        order[i] = best
        numbered[best] = True
        for u in range(n):
            if not numbered[u] and (rows[best] >> u) & 1:
                weight[u] += 1
    pos = np.empty(n, np.int64)
    for i in range(n):
        pos[order[i]] = i
    for i in range(n):
        v = order[i]
        parent = -1
        parent_pos = n
        for u in range(n):
            if (rows[v] >> u) & 1 and pos[u] > i and pos[u] < parent_pos:
                parent = u
                parent_pos = pos[u]
        if parent < 0:
            continue
        for u in range(n):
            if u != parent and (rows[v] >> u) & 1 and pos[u] > i:
                if not ((rows[parent] >> u) & 1):
                    return False
    return True


@jit
def avoiding_components(rows, n):
    """comp[a, x]: component id of x in G - N[a], or -1 for x in N[a]."""
    comp = np.full((n, n), -1, np.int64)
    queue = np.empty(n, np.int64)
    for a in range(n):
        closed = rows[a] | (1 << a)
        label = 0
        for s in range(n):
            if (closed >> s) & 1 or comp[a, s] >= 0:
                continue
            comp[a, s] = label
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                for y in range(n):
                    if (rows[x] >> y) & 1 and not ((closed >> y) & 1) and comp[a, y] < 0:
                        comp[a, y] = label
                        queue[tail] = y
                        tail += 1
            label += 1
    return comp


@jit
def has_asteroidal_triple(rows, n):
    comp = avoiding_components(rows, n)
    for a in range(n):
        for b in range(a + 1, n):
            if (rows[a] >> b) & 1:
                continue
            for c in range(b + 1, n):
                if (rows[a] >> c) & 1 or (rows[b] >> c) & 1:
                    continue
                if comp[a, b] == comp[a, c] and comp[b, a] == comp[b, c] and comp[c, a] == comp[c, b]:
                    return True
    return False


@jit
def has_claw(rows, n):
    for v in range(n):
        for a in range(n):
            if not ((rows[v] >> a) & 1):
                continue
            for b in range(a + 1, n):
                if not ((rows[v] >> b) & 1) or (rows[a] >> b) & 1:
                    continue
                rest = rows[v] & ~rows[a] & ~rows[b] & ~(1 << a) & ~(1 << b)
                if rest != 0:
                    return True
    return False


@jit
def is_interval(rows, n):
    return is_chordal(rows, n) and not has_asteroidal_triple(rows, n)


@jit
def is_unit_interval(rows, n):
    return is_interval(rows, n) and not has_claw(rows, n)


@jit
def minimal_completion_masks(rows, n, eu, ev, unit):
    """Flag every inclusion-minimal subset of the non-edges ``(eu[b], ev[b])``
    whose addition yields an interval (or unit interval) graph.

    Masks are visited in increasing numeric order, so every subset of ``m``
    is settled before ``m``; ``below[m]`` records that ``m`` or one of its
    subsets is a completion, and recognition runs only when it is not.
    """
    count = len(eu)
    total = 1 << count
    below = np.zeros(total, np.bool_)
    minimal = np.zeros(total, np.bool_)
    work = rows.copy()
    for m in range(total):
        covered = False
        for b in range(count):
            if (m >> b) & 1 and below[m ^ (1 << b)]:
                covered = True
                break
        if covered:
            below[m] = True
            continue
        for v in range(n):
            work[v] = rows[v]
        for b in range(count):
            if (m >> b) & 1:
                work[eu[b]] |= 1 << ev[b]
                work[ev[b]] |= 1 << eu[b]
        if unit:
            ok = is_unit_interval(work, n)
        else:
            ok = is_interval(work, n)
        if ok:
            below[m] = True
            minimal[m] = True
    return minimal


_PURE = {}


def pure(name):
    """Undecorated kernel ``name`` whose calls to other kernels are also
    undecorated, so it runs on Python-int rows end to end."""
    if not _PURE:
        ns = dict(globals())
        for key, value in list(ns.items()):
            inner = getattr(value, "py_func", None)
            if inner is not None and callable(value):
                ns[key] = types.FunctionType(inner.__code__, ns, key, inner.__defaults__)
        _PURE.update({k: v for k, v in ns.items() if isinstance(v, types.FunctionType) and hasattr(globals()[k], "py_func")})
    return _PURE[name]
