"""Constructors for the graph families: TCC graphs, divisor graphs, power
graphs of cyclic groups, hypercube closures, lifted hypercubes and crowns.

Tuple vertices carry canonical ``"(x1,...,xs)"`` labels so copies built by
different routes can be compared by exact edge-set equality.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

from .errors import InputError
from .graph import LabeledGraph, tuple_label

MAX_FACTOR_INPUT = 2**31


def _positive_ints(values, what: str) -> tuple[int, ...]:
    out = []
    for x in values:
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise InputError(f"{what} must be integers, got {x!r}")
        out.append(int(x))
    return tuple(out)


def comparability_adjacency(coords: np.ndarray) -> np.ndarray:
    """Distinct rows are adjacent iff componentwise comparable."""
    le = np.all(coords[:, None, :] <= coords[None, :, :], axis=2)
    adj = le | le.T
    np.fill_diagonal(adj, False)
    return adj


def tcc_tuples(m) -> list[tuple[int, ...]]:
    return list(itertools.product(*(range(mi + 1) for mi in m)))


def build_tcc(m) -> LabeledGraph:
    """Transitive closure of the Cartesian product K_{m_1+1} x ... x K_{m_d+1}."""
    m = _positive_ints(m, "TCC exponents")
    if not m:
        raise InputError("TCC needs at least one exponent")
    if any(mi <= 0 for mi in m):
        raise InputError(f"TCC exponents must be positive, got {list(m)}")
    tuples = tcc_tuples(m)
    coords = np.array(tuples, dtype=np.int64).reshape(len(tuples), len(m))
    return LabeledGraph(tuple(tuple_label(t) for t in tuples), comparability_adjacency(coords))


def divisors(n: int) -> list[int]:
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def divisibility_adjacency(values) -> np.ndarray:
    v = np.asarray(values, dtype=np.int64)
    div = (v[None, :] % v[:, None]) == 0  # div[i, j]: v_i | v_j
    adj = div | div.T
    np.fill_diagonal(adj, False)
    return adj


def build_divisor_graph(n: int) -> LabeledGraph:
    """D(n): divisors of n in increasing order, adjacent when one divides the other."""
    divs = divisors(n)
    return LabeledGraph(tuple(str(d) for d in divs), divisibility_adjacency(divs))


def build_power_graph_cyclic(n: int) -> LabeledGraph:
    """Power graph of the additive group Z_n on vertices 0..n-1.

    x lies in the cyclic subgroup generated by y iff gcd(y, n) divides x.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    x = np.arange(n, dtype=np.int64)
    g = np.gcd(x, n)
    contains = (x[None, :] % g[:, None]) == 0  # contains[y, x]: x in <y>
    adj = contains | contains.T
    np.fill_diagonal(adj, False)
    return LabeledGraph(tuple(str(i) for i in range(n)), adj)


def element_order(x: int, n: int) -> int:
    return n // math.gcd(x, n)


def build_reduced_power_graph_cyclic(n: int) -> tuple[LabeledGraph, dict[str, str]]:
    """Reduced power graph of Z_n and the element -> class map.

    One vertex per divisor d of n, standing for the class of elements of
    order d; classes are adjacent when their orders divide one another.
    """
    if n < 1:
        raise InputError(f"n must be positive, got {n}")
    class_of = {str(x): str(element_order(x, n)) for x in range(n)}
    # the element n/d generates the unique subgroup of order d
    orders = sorted({element_order(x, n) for x in range(n)})
    reps = np.array([n // d for d in orders], dtype=np.int64)
    g = np.gcd(reps, n)
    contains = (reps[None, :] % g[:, None]) == 0
    adj = contains | contains.T
    np.fill_diagonal(adj, False)
    return LabeledGraph(tuple(str(d) for d in orders), adj), class_of


def build_tc_hypercube(s: int, truncated: bool = False) -> LabeledGraph:
    if s < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {s}")
    if truncated and s < 2:
        raise InputError("truncated hypercube closure needs s >= 2")
    g = build_tcc([1] * s)
    if not truncated:
        return g
    keep = [v for v in g.vertices if v not in (tuple_label([0] * s), tuple_label([1] * s))]
    idx = [g.index[v] for v in keep]
    return LabeledGraph(tuple(keep), g.adj[np.ix_(idx, idx)])


def lifted_tuples(s: int, k: int) -> list[tuple[int, ...]]:
    return [t for t in itertools.product((k - 1, k), repeat=s) if len(set(t)) > 1]


def build_lifted(s: int, k: int) -> LabeledGraph:
    """Non-uniform s-tuples over {k-1, k}, adjacent under componentwise order."""
    if s < 2 or k < 1:
        raise InputError(f"lifted hypercube needs s >= 2 and k >= 1, got s={s}, k={k}")
    tuples = lifted_tuples(s, k)
    coords = np.array(tuples, dtype=np.int64)
    return LabeledGraph(tuple(tuple_label(t) for t in tuples), comparability_adjacency(coords))


def build_crown(s: int) -> LabeledGraph:
    """K_{s,s} minus a perfect matching: a_i ~ b_j iff i != j."""
    if s < 2:
        raise InputError(f"crown graph needs s >= 2, got {s}")
    labels = [f"a{i}" for i in range(1, s + 1)] + [f"b{j}" for j in range(1, s + 1)]
    edges = [(f"a{i}", f"b{j}") for i in range(1, s + 1) for j in range(1, s + 1) if i != j]
    return LabeledGraph.from_edges(labels, edges)


@dataclass(frozen=True)
class Factorization:
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    @property
    def sorted_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(self.exponents))

    @property
    def omega(self) -> int:
        return len(self.primes)

    def sorting_permutation(self) -> tuple[int, ...]:
        """Prime indices ordered by (exponent, prime): position i of the sorted
        exponent list comes from prime index ``perm[i]``."""
        return tuple(sorted(range(len(self.primes)), key=lambda i: (self.exponents[i], self.primes[i])))


def exponents_of(n: int) -> Factorization:
    """Prime factorization by trial division (n = 1 gives the empty one)."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    if n > MAX_FACTOR_INPUT:
        raise InputError(f"n = {n} exceeds the factorization cap 2^31")
    n = int(n)
    primes, exps = [], []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            primes.append(p)
            exps.append(e)
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
        exps.append(1)
    return Factorization(tuple(primes), tuple(exps))


def divisor_to_tuple(d: int, primes) -> tuple[int, ...]:
    out = []
    for p in primes:
        e = 0
        while d % p == 0:
            d //= p
            e += 1
        out.append(e)
    return tuple(out)


def divisor_tuple_map(n: int) -> dict[str, str]:
    """Label map D(n) -> TCC(sorted exponents of n).

    A divisor's exponent vector is read in the order of the sorted exponents
    (ties broken by prime), so the image is a vertex of build_tcc(sorted).
    """
    fac = exponents_of(n)
    perm = fac.sorting_permutation()
    ordered = [fac.primes[i] for i in perm]
    return {str(d): tuple_label(divisor_to_tuple(d, ordered)) for d in divisors(n)}


FAMILY_KINDS = (
    "tcc",
    "divisor",
    "power-cyclic",
    "reduced-power-cyclic",
    "hypercube-tc",
    "hypercube-tc-truncated",
    "lifted",
    "crown",
)


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        kind = {"reduced-power": "reduced-power-cyclic"}.get(self.kind, self.kind)
        if kind not in FAMILY_KINDS:
            raise InputError(f"unknown family kind {self.kind!r}; choose from {', '.join(FAMILY_KINDS)}")
        params = _positive_ints(self.params, "family params")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", params)
        self._check()

    def _check(self):
        kind, p = self.kind, self.params
        if kind == "tcc":
            if not p or any(x <= 0 for x in p):
                raise InputError("tcc params must be a non-empty list of positive exponents")
        elif kind in ("divisor", "power-cyclic", "reduced-power-cyclic"):
            if len(p) != 1 or p[0] < 1:
                raise InputError(f"{kind} takes one parameter n >= 1")
        elif kind == "hypercube-tc":
            if len(p) != 1 or p[0] < 1:
                raise InputError("hypercube-tc takes one parameter s >= 1")
        elif kind == "hypercube-tc-truncated":
            if len(p) != 1 or p[0] < 2:
                raise InputError("hypercube-tc-truncated takes one parameter s >= 2")
        elif kind == "lifted":
            if len(p) != 2 or p[0] < 2 or p[1] < 1:
                raise InputError("lifted takes (s, k) with s >= 2 and k >= 1")
        elif kind == "crown":
            if len(p) != 1 or p[0] < 2:
                raise InputError("crown takes one parameter s >= 2")

    def build(self) -> LabeledGraph:
        kind, p = self.kind, self.params
        if kind == "tcc":
            return build_tcc(p)
        if kind == "divisor":
            return build_divisor_graph(p[0])
        if kind == "power-cyclic":
            return build_power_graph_cyclic(p[0])
        if kind == "reduced-power-cyclic":
            return build_reduced_power_graph_cyclic(p[0])[0]
        if kind == "hypercube-tc":
            return build_tc_hypercube(p[0])
        if kind == "hypercube-tc-truncated":
            return build_tc_hypercube(p[0], truncated=True)
        if kind == "lifted":
            return build_lifted(p[0], p[1])
        return build_crown(p[0])

    def to_json(self) -> dict:
        return {"kind": self.kind, "params": list(self.params)}

    @classmethod
    def from_json(cls, data: Mapping) -> "FamilySpec":
        try:
            return cls(data["kind"], tuple(data.get("params", ())))
        except (KeyError, TypeError) as exc:
            raise InputError(f"family JSON needs 'kind' and 'params': {exc}") from None
