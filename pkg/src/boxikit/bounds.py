"""Closed-form bounds on the boxicity/cubicity of TCC graphs, the older
literature bounds they improve on, and the join-of-hypercubes witness
behind the lower bound."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .errors import InputError, VerificationError
from .families import build_crown, build_tc_hypercube, build_tcc, exponents_of, lifted_tuples
from .graph import LabeledGraph, format_rational, induced_subgraph, tuple_label
from .isomorphism import are_isomorphic


def _sorted_exponents(m: Sequence[int]) -> list[int]:
    m = [int(x) for x in m]
    if not m:
        raise InputError("exponent list is empty")
    if any(x <= 0 for x in m):
        raise InputError(f"exponents must be positive, got {m}")
    if any(a > b for a, b in zip(m, m[1:])):
        raise InputError(f"exponents must be sorted non-decreasingly, got {m}")
    return m


def upper_bound(m: Sequence[int]) -> int:
    """m_1 + ... + m_{d-1}; zero for a single exponent."""
    m = _sorted_exponents(m)
    return sum(m[:-1])


def lower_bound(m: Sequence[int]) -> int:
    """m_1 for d = 2; (m_1 + m_3 + ... + m_{d-2}) + m_{d-1} for odd d;
    (m_2 + m_4 + ... + m_{d-2}) + m_{d-1} for even d."""
    m = _sorted_exponents(m)
    d = len(m)
    if d < 2:
        raise InputError("the lower bound formula needs at least two exponents")
    if d == 2:
        return m[0]
    start = 1 if d % 2 else 2  # 1-based index of the first alternating term
    return sum(m[i - 1] for i in range(start, d - 1, 2)) + m[d - 2]


def ceil_half(s: int) -> int:
    return (s + 1) // 2


def general_lower_bound(m: Sequence[int], f: Callable[[int], int] = ceil_half) -> int:
    """m_1 f(d) + (m_2 - m_1) f(d-1) + ... + (m_{d-1} - m_{d-2}) f(2),
    where f(s) is any lower bound on the boxicity of the s-cube closure."""
    m = _sorted_exponents(m)
    d = len(m)
    if d < 2:
        raise InputError("the general lower bound needs at least two exponents")
    total = m[0] * f(d)
    for l in range(1, d - 1):
        total += (m[l] - m[l - 1]) * f(d - l)
    return total


@dataclass(frozen=True)
class Comparison:
    eq1: int
    eq2: int
    eq3: Fraction


def comparison_quantities(exponents: Sequence[int]) -> Comparison:
    """Bounds obtained from poset dimension for D(n), n = prod p_i^{a_i}:
    box <= s * sum(a), cub <= s * sum(a) * ceil(log2 |V|), box >= s / 2."""
    a = [int(x) for x in exponents]
    if not a or any(x <= 0 for x in a):
        raise InputError(f"exponents must be a non-empty list of positive integers, got {a}")
    s = len(a)
    vertices = math.prod(x + 1 for x in a)
    log_ceil = (vertices - 1).bit_length()  # ceil(log2 vertices) for vertices >= 1
    eq1 = s * sum(a)
    return Comparison(eq1, eq1 * log_ceil, Fraction(s, 2))


def comparison_for_n(n: int) -> Comparison:
    fac = exponents_of(n)
    if fac.omega == 0:
        raise InputError("n = 1 has no prime factors")
    return comparison_quantities(fac.exponents)


@dataclass(frozen=True)
class BoundReport:
    m: tuple[int, ...]
    lower: int
    upper: int
    general_lower: int
    eq1: int
    eq2: int
    eq3: Fraction
    chain: int

    def to_json(self) -> dict:
        return {
            "m": list(self.m),
            "lower": self.lower,
            "upper": self.upper,
            "general_lower": self.general_lower,
            "eq1": self.eq1,
            "eq2": self.eq2,
            "eq3": format_rational(self.eq3),
            "chain": self.chain,
        }


def bound_report(m: Sequence[int]) -> BoundReport:
    m = _sorted_exponents(m)
    if len(m) == 1:
        lower = general = 0
    else:
        lower, general = lower_bound(m), general_lower_bound(m)
    cmp = comparison_quantities(m)
    return BoundReport(tuple(m), lower, upper_bound(m), general, cmp.eq1, cmp.eq2, cmp.eq3, sum(m) + 1)


@dataclass(frozen=True)
class WitnessComponent:
    vertices: tuple[str, ...]
    dimension: int  # s of the truncated s-cube closure it copies
    level: int  # the lift k: coordinates range over {k-1, k}
    fixed_prefix: int  # leading coordinates pinned to m_1..m_l

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "level": self.level,
            "fixed_prefix": self.fixed_prefix,
            "vertices": list(self.vertices),
        }


@dataclass(frozen=True)
class WitnessDecomposition:
    m: tuple[int, ...]
    components: tuple[WitnessComponent, ...]
    join_verified: bool
    isomorphism_verified: bool

    def weighted_sum(self, f: Callable[[int], int] = ceil_half) -> int:
        return sum(f(c.dimension) for c in self.components)

    def to_json(self) -> dict:
        return {
            "m": list(self.m),
            "components": [c.to_json() for c in self.components],
            "join_verified": self.join_verified,
            "isomorphism_verified": self.isomorphism_verified,
            "weighted_sum": self.weighted_sum(),
        }


def witness_components(m: Sequence[int]) -> list[WitnessComponent]:
    m = _sorted_exponents(m)
    d = len(m)
    if d < 2:
        raise InputError("the witness needs at least two exponents")
    comps = []
    for j in range(1, m[0] + 1):
        verts = tuple(tuple_label(t) for t in lifted_tuples(d, j))
        comps.append(WitnessComponent(verts, d, j, 0))
    for l in range(1, d - 1):
        prefix = tuple(m[:l])
        for j in range(1, m[l] - m[l - 1] + 1):
            level = m[l - 1] + j
            verts = tuple(tuple_label(prefix + t) for t in lifted_tuples(d - l, level))
            comps.append(WitnessComponent(verts, d - l, level, l))
    return comps


def extract_witness(m: Sequence[int], check_isomorphism: bool = True) -> WitnessDecomposition:
    """Vertex-disjoint lifted-hypercube subgraphs of TCC(m) that pairwise join.

    Raises VerificationError if disjointness, the join, or (when requested)
    the isomorphism of each part with the truncated cube closure fails.
    """
    m = _sorted_exponents(m)
    g = build_tcc(m)
    comps = witness_components(m)
    seen: set[str] = set()
    for c in comps:
        if seen.intersection(c.vertices):
            raise VerificationError(f"witness components overlap: {sorted(seen.intersection(c.vertices))[:3]}")
        seen.update(c.vertices)
    for a in range(len(comps)):
        ia = [g.index[v] for v in comps[a].vertices]
        for b in range(a + 1, len(comps)):
            ib = [g.index[v] for v in comps[b].vertices]
            if not g.adj[np.ix_(ia, ib)].all():
                raise VerificationError(f"components {a} and {b} are not fully cross-adjacent")
    iso = False
    if check_isomorphism:
        for c in comps:
            part = induced_subgraph(g, c.vertices)
            cube = build_tc_hypercube(c.dimension, truncated=True)
            if are_isomorphic(part, cube) is None:
                raise VerificationError(f"component at level {c.level} is not a truncated {c.dimension}-cube closure")
        iso = True
    return WitnessDecomposition(tuple(m), tuple(comps), True, iso)


@dataclass(frozen=True)
class CrownWitness:
    a: tuple[str, ...]
    b: tuple[str, ...]
    matching: tuple[tuple[str, str], ...]
    graph: LabeledGraph


def extract_crown(s: int) -> CrownWitness:
    """Weight-1 and weight-(s-1) vertices of TC(H_s), matched by complement."""
    if s < 3:
        raise InputError("crown extraction needs s >= 3")
    a_side, b_side, matching = [], [], []
    for i in range(s):
        unit = [0] * s
        unit[i] = 1
        comp = [1 - x for x in unit]
        a_side.append(tuple_label(unit))
        b_side.append(tuple_label(comp))
        matching.append((a_side[-1], b_side[-1]))
    cube = build_tc_hypercube(s)
    sub = induced_subgraph(cube, a_side + b_side)
    if are_isomorphic(sub, build_crown(s)) is None:
        raise VerificationError(f"induced subgraph on A and B is not the crown graph of order {s}")
    return CrownWitness(tuple(a_side), tuple(b_side), tuple(matching), sub)
