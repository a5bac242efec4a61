"""Finite posets: divisibility orders, comparability graphs, realizers and
an exact dimension search for small posets."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

import numpy as np

from .cover import CoverSearch, maximal_sets
from .errors import CapacityError, InputError
from .families import divisors, exponents_of
from .graph import LabeledGraph

DEFAULT_MAX_EXTENSIONS = 5000


@dataclass(frozen=True, eq=False)
class Poset:
    """``less[i, j]`` is true iff ``ground[i] < ground[j]``."""

    ground: tuple[str, ...]
    less: np.ndarray

    def __post_init__(self):
        ground = tuple(str(x) for x in self.ground)
        less = np.array(self.less, dtype=bool, copy=True)
        n = len(ground)
        if less.shape != (n, n):
            raise InputError(f"relation shape {less.shape} does not match {n} elements")
        if len(set(ground)) != n:
            raise InputError("poset elements must be distinct")
        if n and less.diagonal().any():
            raise InputError("strict order must be irreflexive")
        if (less & less.T).any():
            raise InputError("strict order must be antisymmetric")
        if n and ((less.astype(np.int64) @ less.astype(np.int64)) > 0)[~less].any():
            raise InputError("strict order must be transitively closed")
        less.flags.writeable = False
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "less", less)

    @classmethod
    def from_pairs(cls, ground: Sequence, pairs) -> "Poset":
        """Transitive closure of the given ``(smaller, larger)`` label pairs."""
        ground = tuple(str(x) for x in ground)
        index = {x: i for i, x in enumerate(ground)}
        rel = np.zeros((len(ground), len(ground)), dtype=bool)
        for a, b in pairs:
            rel[index[str(a)], index[str(b)]] = True
        for k in range(len(ground)):
            rel |= rel[:, [k]] & rel[[k], :]
        return cls(ground, rel)

    @property
    def size(self) -> int:
        return len(self.ground)

    def comparable(self) -> np.ndarray:
        return self.less | self.less.T

    def incomparable_pairs(self) -> list[tuple[int, int]]:
        inc = ~self.comparable()
        rows, cols = np.nonzero(np.triu(inc, 1))
        return list(zip(rows.tolist(), cols.tolist()))

    def is_chain(self) -> bool:
        return not self.incomparable_pairs()


def divisibility_poset(ground) -> Poset:
    values = [int(x) for x in ground]
    if not values:
        raise InputError("divisibility poset needs a non-empty ground set")
    if len(set(values)) != len(values) or min(values) < 1:
        raise InputError("ground set must consist of distinct positive integers")
    v = np.array(values, dtype=np.int64)
    less = (v[None, :] % v[:, None]) == 0
    np.fill_diagonal(less, False)
    return Poset(tuple(str(x) for x in values), less)


def comparability_graph(p: Poset) -> LabeledGraph:
    return LabeledGraph(p.ground, p.comparable())


@dataclass(frozen=True)
class LinearExtension:
    order: tuple[str, ...]


@dataclass(frozen=True)
class Realizer:
    extensions: tuple[LinearExtension, ...]

    def __len__(self):
        return len(self.extensions)

    def to_json(self) -> dict:
        return {"extensions": [list(e.order) for e in self.extensions]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Realizer":
        try:
            return cls(tuple(LinearExtension(tuple(str(x) for x in e)) for e in data["extensions"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"realizer JSON needs 'extensions': {exc}") from None


def build_divisibility_realizer(n: int) -> Realizer:
    """One extension per prime p_i of n: the divisors grouped by the power of
    p_i they contain (power 0 first), each group in increasing order."""
    fac = exponents_of(n)
    divs = divisors(n)
    extensions = []
    for p, alpha in zip(fac.primes, fac.exponents):
        blocks: list[list[int]] = [[] for _ in range(alpha + 1)]
        for d in divs:
            j = 0
            while d % p == 0:
                d //= p
                j += 1
            blocks[j].append(d * p**j)
        order = tuple(str(x) for block in blocks for x in sorted(block))
        extensions.append(LinearExtension(order))
    return Realizer(tuple(extensions))


@dataclass(frozen=True)
class RealizerVerdict:
    ok: bool
    kind: str | None = None  # "extension-violation" | "pair-not-reversed"
    pair: tuple[str, str] | None = None
    extension: int | None = None

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        if self.ok:
            return {"ok": True}
        out = {"ok": False, "kind": self.kind, "pair": list(self.pair)}
        if self.extension is not None:
            out["extension"] = self.extension
        return out


def verify_realizer(p: Poset, r: Realizer) -> RealizerVerdict:
    ground = set(p.ground)
    index = {x: i for i, x in enumerate(p.ground)}
    positions = []
    for e in r.extensions:
        if len(e.order) != p.size or set(e.order) != ground:
            raise InputError("every extension must list each poset element exactly once")
        pos = np.empty(p.size, dtype=np.int64)
        for at, x in enumerate(e.order):
            pos[index[x]] = at
        positions.append(pos)
    for k, pos in enumerate(positions):
        bad = p.less & (pos[:, None] > pos[None, :])
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            return RealizerVerdict(False, "extension-violation", (p.ground[i], p.ground[j]), k)
    for i, j in p.incomparable_pairs():
        before = [pos[i] < pos[j] for pos in positions]
        if not (any(before) and not all(before)):
            return RealizerVerdict(False, "pair-not-reversed", (p.ground[i], p.ground[j]))
    return RealizerVerdict(True)


def linear_extensions(p: Poset, cap: int = DEFAULT_MAX_EXTENSIONS) -> Iterator[tuple[int, ...]]:
    """All linear extensions as index tuples; more than ``cap`` raises."""
    n = p.size
    preds = [int(sum(1 << int(i) for i in np.flatnonzero(p.less[:, j]))) for j in range(n)]
    order: list[int] = []
    produced = 0

    def rec(placed: int):
        nonlocal produced
        if len(order) == n:
            produced += 1
            if produced > cap:
                raise CapacityError(
                    f"poset has more than {cap} linear extensions", extensions_seen=produced - 1, elements=n
                )
            yield tuple(order)
            return
        for j in range(n):
            if not (placed >> j) & 1 and preds[j] & ~placed == 0:
                order.append(j)
                yield from rec(placed | (1 << j))
                order.pop()

    yield from rec(0)


def exact_poset_dimension(
    p: Poset, cap_extensions: int = DEFAULT_MAX_EXTENSIONS, cap_k: int | None = None
) -> int:
    """Minimum realizer size by exhaustive cover search over linear extensions.

    A realizer must put each incomparable pair in both orders, so the
    universe is the set of incomparable ordered pairs and an extension covers
    the ordered pairs it lists first-element-first.
    """
    pairs = p.incomparable_pairs()
    if not pairs:
        return 1
    bit_of = {}
    for i, j in pairs:
        bit_of[(i, j)] = len(bit_of)
        bit_of[(j, i)] = len(bit_of)
    universe = (1 << len(bit_of)) - 1
    sets = []
    for ext in linear_extensions(p, cap_extensions):
        pos = {v: at for at, v in enumerate(ext)}
        mask = 0
        for (i, j), b in bit_of.items():
            if pos[i] < pos[j]:
                mask |= 1 << b
        sets.append(mask)
    search = CoverSearch(maximal_sets(sets), universe)
    k = search.minimum(cap_k)
    if k is None:
        raise CapacityError(f"poset dimension exceeds cap {cap_k}", extensions=len(sets))
    return k


def longest_chain(p: Poset) -> int:
    """Number of elements in a longest chain."""
    if p.size == 0:
        return 0
    # elements with fewer predecessors come first: a topological order
    topo = np.argsort(p.less.sum(axis=0), kind="stable")
    length = np.ones(p.size, dtype=np.int64)
    for j in topo:
        below = np.flatnonzero(p.less[:, j])
        if below.size:
            length[j] = 1 + length[below].max()
    return int(length.max())
