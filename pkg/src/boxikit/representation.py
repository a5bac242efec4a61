"""Explicit cube representations of TCC graphs and their transports.

The construction works level by level on the tuple coordinates.  Going from
tuples of length s-1 to length s (last coordinate ranging over 0..a_s):

* every existing dimension is copied, the box of ``(x, b)`` being the box
  of ``x`` (these keep non-edges whose prefixes are already incomparable);
* ``a_s`` new dimensions are added.  With ``S = a_1 + ... + a_{s-1}`` and
  ``|x|`` the coordinate sum of ``x``, dimension ``a`` (1 <= a <= a_s) maps
  ``(x, b)`` to ``[|x|, |x| + S]`` when ``b < a`` and to ``[|x| - S, |x|]``
  otherwise.  This separates ``(x, b)`` and ``(y, c)`` when ``x > y`` and
  ``b < c`` (dimension ``a = b + 1``).

Every new interval has length S, so each dimension is a unit interval
graph after rescaling.  Starting from a single chain (zero dimensions) the
total is ``a_2 + ... + a_d``; feeding the exponents largest-first gives the
sum of all but the largest exponent.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError, VerificationError
from .families import (
    build_divisor_graph,
    build_power_graph_cyclic,
    build_reduced_power_graph_cyclic,
    build_tcc,
    divisor_tuple_map,
    exponents_of,
)
from .graph import (
    BoxRepresentation,
    Interval,
    LabeledGraph,
    check_coverage,
    overlap_matrix,
    tuple_label,
)


class CompleteGraphWarning(UserWarning):
    """A single exponent gives a chain, represented with zero dimensions."""


@dataclass(frozen=True)
class TraceLevel:
    level: int
    S: int
    type1_dims: int
    type2_dims: int

    def to_json(self) -> dict:
        return {"level": self.level, "S": self.S, "type1_dims": self.type1_dims, "type2_dims": self.type2_dims}


@dataclass(frozen=True)
class ConstructionTrace:
    levels: tuple[TraceLevel, ...]
    # coordinate order used by the recursion: position i holds exponent index order[i]
    order: tuple[int, ...]

    def type2_range(self, level: int) -> range:
        """Dimension indices added at ``level`` (its Type-2 dimensions)."""
        for lv in self.levels:
            if lv.level == level:
                return range(lv.type1_dims, lv.type1_dims + lv.type2_dims)
        raise KeyError(level)

    def to_json(self) -> list[dict]:
        return [lv.to_json() for lv in self.levels]


def recursion_order(m) -> tuple[int, ...]:
    """Coordinate indices of ``m`` by decreasing exponent (stable on ties)."""
    return tuple(sorted(range(len(m)), key=lambda i: -m[i]))


def tcc_cube_representation(m) -> tuple[BoxRepresentation, ConstructionTrace]:
    """Cube representation of ``build_tcc(m)`` in ``sum(sorted(m)[:-1])`` dimensions.

    Labels match ``build_tcc(m)`` for any order of ``m``; the recursion runs
    on the exponents sorted in decreasing order.
    """
    m = [int(x) for x in m]
    if not m or any(x <= 0 for x in m):
        raise InputError(f"exponents must be a non-empty list of positive integers, got {m}")
    if len(m) == 1:
        warnings.warn(
            "TCC with one exponent is complete; returning the 0-dimensional representation",
            CompleteGraphWarning,
            stacklevel=2,
        )
    order = recursion_order(m)
    a = [m[i] for i in order]

    # level 1: a chain, no dimensions
    boxes: dict[tuple[int, ...], list[Interval]] = {(x,): [] for x in range(a[0] + 1)}
    lengths: list[Fraction] = []
    levels = [TraceLevel(1, 0, 0, 0)]
    for s in range(2, len(a) + 1):
        S = sum(a[: s - 1])
        k = len(lengths)
        a_s = a[s - 1]
        new_boxes = {}
        for x, box in boxes.items():
            w = sum(x)
            for b in range(a_s + 1):
                extra = [
                    Interval(Fraction(w), Fraction(w + S)) if b <= cut - 1 else Interval(Fraction(w - S), Fraction(w))
                    for cut in range(1, a_s + 1)
                ]
                new_boxes[x + (b,)] = box + extra
        boxes = new_boxes
        lengths.extend([Fraction(S)] * a_s)
        levels.append(TraceLevel(s, S, k, a_s))

    def relabel(t):
        x = [0] * len(m)
        for pos, idx in enumerate(order):
            x[idx] = t[pos]
        return tuple_label(x)

    rep = BoxRepresentation(
        len(lengths), {relabel(t): tuple(box) for t, box in boxes.items()}, tuple(lengths)
    )
    return rep, ConstructionTrace(tuple(levels), order)


@dataclass(frozen=True)
class Verdict:
    ok: bool
    pair: tuple[str, str] | None = None
    kind: str | None = None  # "missing-edge" | "spurious-edge"

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True}
        return {"ok": False, "pair": list(self.pair), "kind": self.kind}


def verify_representation(g: LabeledGraph, rep: BoxRepresentation) -> Verdict:
    """Exact edge-set comparison; reports the first offending pair (i < j)."""
    check_coverage(rep, g.vertices)
    meet = overlap_matrix(rep, g.vertices)
    for i in range(g.n):
        meet[i, i] = g.adj[i, i]
        row_bad = meet[i, i + 1 :] != g.adj[i, i + 1 :]
        if row_bad.any():
            j = i + 1 + int(row_bad.argmax())
            kind = "missing-edge" if g.adj[i, j] else "spurious-edge"
            return Verdict(False, (g.vertices[i], g.vertices[j]), kind)
    return Verdict(True)


def _uniform_lengths(rep: BoxRepresentation) -> tuple[Fraction, ...]:
    lengths = []
    for i in range(rep.dimension):
        seen = {box[i].length for box in rep.boxes.values()}
        if len(seen) > 1:
            raise InputError(f"dimension {i} mixes interval lengths {sorted(seen)[:3]}")
        lengths.append(seen.pop() if seen else Fraction(1))
    return tuple(lengths)


def normalize_to_unit(rep: BoxRepresentation) -> BoxRepresentation:
    """Rescale every axis so all intervals have length 1.

    Axes whose intervals are all points are dropped: such an axis either
    separates nothing (one common point) or is not a cube axis at all.
    """
    lengths = rep.unit_lengths if rep.unit_lengths is not None else _uniform_lengths(rep)
    keep = []
    for i, length in enumerate(lengths):
        if length > 0:
            keep.append(i)
            continue
        if len({box[i].lo for box in rep.boxes.values()}) > 1:
            raise InputError(f"dimension {i} has distinct point intervals and cannot be made unit")
    boxes = {
        v: tuple(box[i].scaled(1 / lengths[i]) for i in keep) for v, box in rep.boxes.items()
    }
    return BoxRepresentation(len(keep), boxes, tuple(Fraction(1) for _ in keep))


def translate_to_origin(rep: BoxRepresentation) -> BoxRepresentation:
    """Shift each axis so that its smallest left endpoint is 0."""
    shifts = [min((box[i].lo for box in rep.boxes.values()), default=Fraction(0)) for i in range(rep.dimension)]
    boxes = {v: tuple(iv.scaled(Fraction(1), shifts[i]) for i, iv in enumerate(box)) for v, box in rep.boxes.items()}
    return BoxRepresentation(rep.dimension, boxes, rep.unit_lengths)


def lift_to_power_graph(n: int, rep_reduced: BoxRepresentation) -> BoxRepresentation:
    """Give every element of Z_n the box of its class in the reduced graph."""
    reduced, class_of = build_reduced_power_graph_cyclic(n)
    verdict = verify_representation(reduced, rep_reduced)
    if not verdict:
        raise InputError(f"representation does not match the reduced power graph: {verdict.to_json()}")
    boxes = {str(x): rep_reduced.boxes[class_of[str(x)]] for x in range(n)}
    return BoxRepresentation(rep_reduced.dimension, boxes, rep_reduced.unit_lengths)


def _checked(g: LabeledGraph, rep: BoxRepresentation, what: str) -> BoxRepresentation:
    verdict = verify_representation(g, rep)
    if not verdict:
        raise VerificationError(f"{what}: {verdict.kind} at {verdict.pair}")
    return rep


def representation_for_divisor_graph(n: int) -> tuple[BoxRepresentation, ConstructionTrace]:
    fac = exponents_of(n)
    if fac.omega == 0:
        return BoxRepresentation(0, {"1": ()}, ()), ConstructionTrace((), ())
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CompleteGraphWarning)
        tcc_rep, trace = tcc_cube_representation(fac.sorted_exponents)
    to_tuple = divisor_tuple_map(n)
    rep = BoxRepresentation(
        tcc_rep.dimension, {d: tcc_rep.boxes[t] for d, t in to_tuple.items()}, tcc_rep.unit_lengths
    )
    return _checked(build_divisor_graph(n), rep, f"D({n})"), trace


def representation_for_power_graph_cyclic(n: int) -> tuple[BoxRepresentation, ConstructionTrace]:
    reduced_rep, trace = representation_for_divisor_graph(n)
    rep = lift_to_power_graph(n, reduced_rep)
    return _checked(build_power_graph_cyclic(n), rep, f"Pow(Z_{n})"), trace


def representation_for_tcc(m) -> tuple[BoxRepresentation, ConstructionTrace]:
    rep, trace = tcc_cube_representation(m)
    return _checked(build_tcc(m), rep, f"TCC{tuple(m)}"), trace

