"""Exact minimum set cover over bitmask sets (branch and bound).

Used twice: covering the non-edges of a graph by broken-sets of interval
completions, and covering the incomparable ordered pairs of a poset by
linear extensions.
"""

from __future__ import annotations

from .errors import CapacityError


class CoverSearch:
    def __init__(self, sets: list[int], universe: int):
        self.sets = list(sets)
        self.universe = universe
        self._containing: dict[int, list[int]] = {}
        bits = universe
        while bits:
            low = bits & -bits
            self._containing[low] = [i for i, s in enumerate(self.sets) if s & low]
            bits ^= low
        self._failed: set[tuple[int, int, int]] = set()

    def feasible(self, uncovered: int, budget: int, start: int = 0) -> bool:
        """Can ``budget`` sets with index >= ``start`` cover ``uncovered``?"""
        if uncovered == 0:
            return True
        if budget <= 0:
            return False
        key = (uncovered, budget, start)
        if key in self._failed:
            return False
        # branch on the uncovered element with the fewest candidate sets
        best = None
        bits = uncovered
        while bits:
            low = bits & -bits
            bits ^= low
            cands = [i for i in self._containing[low] if i >= start]
            if not cands:
                self._failed.add(key)
                return False
            if best is None or len(cands) < len(best):
                best = cands
        # no set covers more than ``widest`` of what is left
        widest = max(bin(self.sets[i] & uncovered).count("1") for i in range(start, len(self.sets)))
        if widest * budget >= bin(uncovered).count("1"):
            for i in best:
                if self.feasible(uncovered & ~self.sets[i], budget - 1, start):
                    return True
        self._failed.add(key)
        return False

    def minimum(self, max_k: int | None = None) -> int | None:
        """Smallest k admitting a cover, or None when it exceeds ``max_k``."""
        if self.universe & ~_union(self.sets):
            return None
        k = 0
        while not self.feasible(self.universe, k):
            k += 1
            if max_k is not None and k > max_k:
                return None
        return k

    def lexicographic_cover(self, k: int) -> tuple[int, ...]:
        """The lexicographically smallest increasing index tuple covering in k sets."""
        chosen = []
        uncovered = self.universe
        start = 0
        for slot in range(k):
            if uncovered == 0:
                break
            for i in range(start, len(self.sets)):
                rest = uncovered & ~self.sets[i]
                if self.feasible(rest, k - slot - 1, i + 1):
                    chosen.append(i)
                    uncovered = rest
                    start = i + 1
                    break
            else:
                raise CapacityError(f"no cover with {k} sets", chosen=chosen)
        return tuple(chosen)


def _union(sets) -> int:
    out = 0
    for s in sets:
        out |= s
    return out


def maximal_sets(sets: list[int]) -> list[int]:
    """Distinct sets not strictly contained in another, in first-seen order."""
    unique = list(dict.fromkeys(sets))
    by_size = sorted(range(len(unique)), key=lambda i: -bin(unique[i]).count("1"))
    kept: list[int] = []
    for i in by_size:
        s = unique[i]
        if not any(s & unique[j] == s for j in kept):
            kept.append(i)
    return [unique[i] for i in sorted(kept)]
