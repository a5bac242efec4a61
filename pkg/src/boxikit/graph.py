"""Graph and box-representation core types.

All objects here are immutable after construction.  Interval endpoints are
exact :class:`fractions.Fraction` values; intervals are closed, so two
intervals that merely touch at one point still intersect.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import InputError

Label = str


def tuple_label(coords: Iterable[int]) -> Label:
    """Canonical label ``"(x1,x2,...)"`` for an integer tuple vertex."""
    return "(" + ",".join(str(int(c)) for c in coords) + ")"


def parse_tuple_label(label: Label) -> tuple[int, ...]:
    body = label.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise InputError(f"not a tuple label: {label!r}")
    inner = body[1:-1].strip()
    if not inner:
        return ()
    return tuple(int(part) for part in inner.split(","))


@dataclass(frozen=True, eq=False)
class LabeledGraph:
    """Finite simple undirected graph over ordered, distinct string labels.

    ``adj`` is a read-only symmetric boolean matrix with a false diagonal.
    Equality is exact: same label order and same adjacency matrix.
    """

    vertices: tuple[Label, ...]
    adj: np.ndarray = field(repr=False)

    def __post_init__(self):
        vertices = tuple(str(v) for v in self.vertices)
        adj = np.array(self.adj, dtype=bool, copy=True)
        n = len(vertices)
        if adj.shape != (n, n):
            raise InputError(f"adjacency shape {adj.shape} does not match {n} vertices")
        if len(set(vertices)) != n:
            seen = set()
            dup = next(v for v in vertices if v in seen or seen.add(v))
            raise InputError(f"duplicate vertex label {dup!r}")
        if n and adj.diagonal().any():
            raise InputError(f"self-loop at {vertices[int(np.argmax(adj.diagonal()))]!r}")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency relation is not symmetric")
        adj.flags.writeable = False
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, vertices: Sequence, edges: Iterable[tuple]) -> "LabeledGraph":
        """Build from a label list and an iterable of label pairs."""
        vertices = tuple(str(v) for v in vertices)
        index = {v: i for i, v in enumerate(vertices)}
        pairs = []
        for u, v in edges:
            try:
                pairs.append((index[str(u)], index[str(v)]))
            except KeyError as exc:
                raise InputError(f"unknown vertex label {exc.args[0]!r}") from None
        return cls.from_index_pairs(vertices, pairs)

    @classmethod
    def from_index_pairs(cls, vertices: Sequence, pairs: Iterable[tuple[int, int]]) -> "LabeledGraph":
        vertices = tuple(str(v) for v in vertices)
        n = len(vertices)
        adj = np.zeros((n, n), dtype=bool)
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"vertex index pair {(i, j)} out of range")
            if i == j:
                raise InputError(f"self-loop at {vertices[i]!r}")
            adj[i, j] = adj[j, i] = True
        return cls(vertices, adj)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def index(self) -> Mapping[Label, int]:
        return MappingProxyType({v: i for i, v in enumerate(self.vertices)})

    @property
    def edge_count(self) -> int:
        return int(self.adj.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)`` with ``i < j`` in lexicographic order."""
        rows, cols = np.nonzero(np.triu(self.adj, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def non_edges(self) -> list[tuple[int, int]]:
        mask = ~self.adj
        rows, cols = np.nonzero(np.triu(mask, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def edge_labels(self) -> list[tuple[Label, Label]]:
        return [(self.vertices[i], self.vertices[j]) for i, j in self.edges()]

    def has_edge(self, u: Label, v: Label) -> bool:
        return bool(self.adj[self.index[u], self.index[v]])

    def neighbors(self, v: Label) -> list[Label]:
        row = self.adj[self.index[v]]
        return [self.vertices[j] for j in np.flatnonzero(row)]

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def relabel(self, mapping: Mapping[Label, Label]) -> "LabeledGraph":
        return LabeledGraph(tuple(mapping[v] for v in self.vertices), self.adj)

    def reorder(self, vertices: Sequence[Label]) -> "LabeledGraph":
        """Same graph with the vertex list permuted to ``vertices``."""
        if sorted(vertices) != sorted(self.vertices):
            raise InputError("reorder needs a permutation of the vertex labels")
        perm = [self.index[v] for v in vertices]
        return LabeledGraph(tuple(vertices), self.adj[np.ix_(perm, perm)])

    def same_edges(self, other: "LabeledGraph") -> bool:
        """Edge-set equality over the same label set, ignoring vertex order."""
        if set(self.vertices) != set(other.vertices):
            return False
        return self == other.reorder(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self.vertices == other.vertices and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((self.vertices, np.packbits(self.adj).tobytes()))

    def __repr__(self):
        return f"LabeledGraph(n={self.n}, m={self.edge_count})"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "LabeledGraph":
        try:
            vertices = data["vertices"]
            edges = data["edges"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"graph JSON needs 'vertices' and 'edges': {exc}") from None
        pairs = []
        for e in edges:
            if len(e) != 2 or not all(isinstance(x, int) for x in e):
                raise InputError(f"edge {e!r} is not a pair of vertex indices")
            if not e[0] < e[1]:
                raise InputError(f"edge {e!r} must satisfy i < j")
            pairs.append((e[0], e[1]))
        return cls.from_index_pairs(vertices, pairs)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InputError("floating-point endpoints are not accepted; use exact rationals")
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise InputError(f"not a rational: {value!r}") from None


def format_rational(q: Fraction) -> str:
    """Canonical ``"p/q"`` string (``q > 0``, reduced; integers keep ``/1``)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = to_fraction(self.lo), to_fraction(self.hi)
        if lo > hi:
            raise InputError(f"interval [{lo}, {hi}] has lo > hi")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def meets(self, other: "Interval") -> bool:
        return max(self.lo, other.lo) <= min(self.hi, other.hi)

    def scaled(self, factor: Fraction, shift: Fraction = Fraction(0)) -> "Interval":
        return Interval((self.lo - shift) * factor, (self.hi - shift) * factor)

    def to_json(self) -> list[str]:
        return [format_rational(self.lo), format_rational(self.hi)]

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True, eq=False)
class BoxRepresentation:
    """One list of ``dimension`` closed intervals per vertex label.

    ``unit_lengths[i]``, when present, is the common length of every
    interval in dimension ``i``.
    """

    dimension: int
    boxes: Mapping[Label, tuple[Interval, ...]]
    unit_lengths: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        k = self.dimension
        if not isinstance(k, (int, np.integer)) or k < 0:
            raise InputError(f"dimension must be a non-negative integer, got {k!r}")
        boxes = {}
        for label, box in self.boxes.items():
            box = tuple(b if isinstance(b, Interval) else Interval(*b) for b in box)
            if len(box) != k:
                raise InputError(f"box of {label!r} has {len(box)} intervals, expected {k}")
            boxes[str(label)] = box
        object.__setattr__(self, "dimension", int(k))
        object.__setattr__(self, "boxes", MappingProxyType(boxes))
        if self.unit_lengths is not None:
            lengths = tuple(to_fraction(x) for x in self.unit_lengths)
            if len(lengths) != k:
                raise InputError(f"unit_lengths has {len(lengths)} entries, expected {k}")
            for i, length in enumerate(lengths):
                if length < 0:
                    raise InputError(f"unit length {length} in dimension {i} is negative")
                for label, box in boxes.items():
                    if box[i].length != length:
                        raise InputError(
                            f"interval {box[i]} of {label!r} in dimension {i} "
                            f"does not have length {length}"
                        )
            object.__setattr__(self, "unit_lengths", lengths)

    def __eq__(self, other):
        if not isinstance(other, BoxRepresentation):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and dict(self.boxes) == dict(other.boxes)
            and self.unit_lengths == other.unit_lengths
        )

    def __hash__(self):
        return hash((self.dimension, tuple(sorted(self.boxes.items()))))

    def projection(self, dim: int) -> dict[Label, Interval]:
        return {v: box[dim] for v, box in self.boxes.items()}

    def relabel(self, mapping: Mapping[Label, Label]) -> "BoxRepresentation":
        return BoxRepresentation(
            self.dimension, {mapping[v]: b for v, b in self.boxes.items()}, self.unit_lengths
        )

    def to_json(self) -> dict:
        data = {
            "dimension": self.dimension,
            "boxes": {v: [iv.to_json() for iv in box] for v, box in self.boxes.items()},
        }
        if self.unit_lengths is not None:
            data["unit_lengths"] = [format_rational(x) for x in self.unit_lengths]
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "BoxRepresentation":
        try:
            k = data["dimension"]
            raw = data["boxes"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"representation JSON needs 'dimension' and 'boxes': {exc}") from None
        boxes = {}
        for label, box in raw.items():
            boxes[label] = tuple(Interval(_parse_rational(lo), _parse_rational(hi)) for lo, hi in box)
        lengths = data.get("unit_lengths")
        if lengths is not None:
            lengths = tuple(_parse_rational(x) for x in lengths)
        return cls(k, boxes, lengths)


def _parse_rational(text) -> Fraction:
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise InputError(f"rational must be a 'p/q' string, got {text!r}")
    return to_fraction(text.strip())


@dataclass(frozen=True)
class CompletionSet:
    """Non-edges of ``base`` that are added to form a supergraph."""

    base: LabeledGraph
    added: frozenset[tuple[Label, Label]]

    def __post_init__(self):
        canon = set()
        for u, v in self.added:
            i, j = self.base.index.get(u), self.base.index.get(v)
            if i is None or j is None:
                raise InputError(f"pair {(u, v)!r} uses a label outside the base graph")
            if i == j or self.base.adj[i, j]:
                raise InputError(f"pair {(u, v)!r} is not a non-edge of the base graph")
            canon.add((u, v) if i < j else (v, u))
        object.__setattr__(self, "added", frozenset(canon))

    def graph(self) -> LabeledGraph:
        adj = self.base.adj.copy()
        for u, v in self.added:
            i, j = self.base.index[u], self.base.index[v]
            adj[i, j] = adj[j, i] = True
        return LabeledGraph(self.base.vertices, adj)

    def sorted_pairs(self) -> list[tuple[Label, Label]]:
        idx = self.base.index
        return sorted(self.added, key=lambda p: (idx[p[0]], idx[p[1]]))


# --------------------------------------------------------------------------
# operations


def intersection_graph(graphs: Sequence[LabeledGraph]) -> LabeledGraph:
    if not graphs:
        raise InputError("intersection of an empty list of graphs")
    first = graphs[0]
    adj = first.adj.copy()
    for g in graphs[1:]:
        if g.vertices != first.vertices:
            for a, b in zip(first.vertices, g.vertices):
                if a != b:
                    raise InputError(f"vertex lists differ at label {b!r} (expected {a!r})")
            raise InputError(f"vertex lists differ in length ({first.n} vs {g.n})")
        adj &= g.adj
    return LabeledGraph(first.vertices, adj)


def _scaled_endpoints(rep: BoxRepresentation, vertices: Sequence[Label]):
    """Endpoints as exact integer arrays of shape (n, k), common denominator."""
    k = rep.dimension
    los = [[rep.boxes[v][i].lo for i in range(k)] for v in vertices]
    his = [[rep.boxes[v][i].hi for i in range(k)] for v in vertices]
    dens = {q.denominator for row in los + his for q in row}
    scale = math.lcm(*dens) if dens else 1
    lo = [[int(q * scale) for q in row] for row in los]
    hi = [[int(q * scale) for q in row] for row in his]
    biggest = max((abs(x) for row in lo + hi for x in row), default=0)
    dtype = np.int64 if biggest < 2**62 else object
    shape = (len(vertices), k)
    return np.array(lo, dtype=dtype).reshape(shape), np.array(hi, dtype=dtype).reshape(shape)


def check_coverage(rep: BoxRepresentation, vertices: Sequence[Label]) -> None:
    have = set(rep.boxes)
    want = set(vertices)
    if have != want:
        missing = sorted(want - have)
        extra = sorted(have - want)
        raise InputError(f"representation coverage mismatch: missing {missing[:5]}, extra {extra[:5]}")


def overlap_matrix(rep: BoxRepresentation, vertices: Sequence[Label], dims=None) -> np.ndarray:
    """Boolean matrix of closed-box intersection, optionally over a subset of dims."""
    lo, hi = _scaled_endpoints(rep, vertices)
    n = len(vertices)
    meet = np.ones((n, n), dtype=bool)
    for i in range(rep.dimension) if dims is None else dims:
        a, b = lo[:, i], hi[:, i]
        meet &= (a[:, None] <= b[None, :]) & (a[None, :] <= b[:, None])
    return meet


def representation_to_graph(rep: BoxRepresentation, vertices: Sequence[Label]) -> LabeledGraph:
    check_coverage(rep, vertices)
    meet = overlap_matrix(rep, vertices)
    np.fill_diagonal(meet, False)
    return LabeledGraph(tuple(vertices), meet)


def induced_subgraph(g: LabeledGraph, keep: Iterable[Label]) -> LabeledGraph:
    keep = list(keep)
    idx = []
    for v in keep:
        if v not in g.index:
            raise InputError(f"unknown vertex label {v!r}")
        idx.append(g.index[v])
    if len(set(idx)) != len(idx):
        raise InputError("repeated label in induced-subgraph selection")
    order = sorted(idx)
    return LabeledGraph(tuple(g.vertices[i] for i in order), g.adj[np.ix_(order, order)])


def join_graphs(graphs: Sequence[LabeledGraph]) -> LabeledGraph:
    seen: set[Label] = set()
    for g in graphs:
        clash = seen.intersection(g.vertices)
        if clash:
            raise InputError(f"join parts share labels: {sorted(clash)[:5]}")
        seen.update(g.vertices)
    vertices = tuple(v for g in graphs for v in g.vertices)
    n = len(vertices)
    adj = np.ones((n, n), dtype=bool)
    start = 0
    for g in graphs:
        end = start + g.n
        adj[start:end, start:end] = g.adj
        start = end
    np.fill_diagonal(adj, False)
    return LabeledGraph(vertices, adj)


def disjoint_union(graphs: Sequence[LabeledGraph]) -> LabeledGraph:
    vertices = tuple(v for g in graphs for v in g.vertices)
    n = len(vertices)
    adj = np.zeros((n, n), dtype=bool)
    start = 0
    for g in graphs:
        end = start + g.n
        adj[start:end, start:end] = g.adj
        start = end
    return LabeledGraph(vertices, adj)


def universal_vertices(g: LabeledGraph) -> list[Label]:
    deg = g.degrees()
    return [g.vertices[i] for i in np.flatnonzero(deg == g.n - 1)]


def strip_universal(g: LabeledGraph) -> LabeledGraph:
    drop = set(universal_vertices(g))
    return induced_subgraph(g, [v for v in g.vertices if v not in drop])


# --------------------------------------------------------------------------
# small named graphs


def complete_graph(n: int, prefix: str = "v") -> LabeledGraph:
    adj = ~np.eye(n, dtype=bool)
    return LabeledGraph(tuple(f"{prefix}{i}" for i in range(n)), adj)


def empty_graph(n: int, prefix: str = "v") -> LabeledGraph:
    return LabeledGraph(tuple(f"{prefix}{i}" for i in range(n)), np.zeros((n, n), dtype=bool))


def path_graph(n: int, prefix: str = "v") -> LabeledGraph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return LabeledGraph.from_index_pairs(labels, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int, prefix: str = "v") -> LabeledGraph:
    labels = [f"{prefix}{i}" for i in range(n)]
    return LabeledGraph.from_index_pairs(labels, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int, prefix: str = "v") -> LabeledGraph:
    labels = [f"{prefix}{i}" for i in range(leaves + 1)]
    return LabeledGraph.from_index_pairs(labels, [(0, i) for i in range(1, leaves + 1)])
