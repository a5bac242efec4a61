"""Exact boxicity and cubicity of small graphs.

A graph has boxicity (cubicity) at most k iff it is the intersection of k
interval (unit interval) supergraphs.  Each supergraph is the graph plus a
completion set S of non-edges, and it keeps the non-edges outside S
broken.  The oracle enumerates the inclusion-minimal completions (so their
broken-sets are maximal) and then finds the fewest broken-sets covering
every non-edge.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from ._accel import NUMBA_ENABLED
from .cover import CoverSearch
from .errors import CapacityError, InputError, VerificationError
from .graph import (
    BoxRepresentation,
    CompletionSet,
    LabeledGraph,
    induced_subgraph,
    universal_vertices,
)
from .recognition import graph_rows, interval_model, is_unit_interval_graph

HARD_MAX_NON_EDGES = 24
MODES = ("boxicity", "cubicity")


def default_max_non_edges() -> int:
    raw = os.environ.get("BOXIKIT_MAX_NONEDGES")
    if raw is None or not raw.strip():
        return 18
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"BOXIKIT_MAX_NONEDGES must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class OracleConfig:
    max_non_edges: int = field(default_factory=default_max_non_edges)
    max_k: int | None = None
    mode: str = "boxicity"

    def __post_init__(self):
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}, got {self.mode!r}")
        if not 0 <= self.max_non_edges <= HARD_MAX_NON_EDGES:
            raise InputError(f"max_non_edges must lie in [0, {HARD_MAX_NON_EDGES}], got {self.max_non_edges}")
        if self.max_k is not None and self.max_k < 0:
            raise InputError("max_k must be non-negative")

    def with_mode(self, mode: str) -> "OracleConfig":
        return OracleConfig(self.max_non_edges, self.max_k, mode)


def _completion_masks(g: LabeledGraph, unit: bool, max_non_edges: int):
    non_edges = g.non_edges()
    if len(non_edges) > max_non_edges:
        raise CapacityError(
            f"{len(non_edges)} non-edges exceed the oracle cap of {max_non_edges}",
            non_edges=len(non_edges),
            cap=max_non_edges,
        )
    work = g
    if g.n > _kernels.MAX_JIT_VERTICES:
        if unit:
            raise CapacityError(f"cubicity oracle handles at most {_kernels.MAX_JIT_VERTICES} vertices", n=g.n)
        # universal vertices never change interval-ness of a supergraph
        drop = set(universal_vertices(g))
        work = induced_subgraph(g, [v for v in g.vertices if v not in drop])
    # non-edges never touch a universal vertex, so every endpoint survives
    eu = np.array([work.index[g.vertices[i]] for i, _ in non_edges], dtype=np.int64)
    ev = np.array([work.index[g.vertices[j]] for _, j in non_edges], dtype=np.int64)
    rows = graph_rows(work)
    kernel = _kernels.minimal_completion_masks
    if not NUMBA_ENABLED or not isinstance(rows, np.ndarray):
        kernel = _kernels.pure("minimal_completion_masks")
        rows, eu, ev = [int(r) for r in rows], eu.tolist(), ev.tolist()
    flags = kernel(rows, work.n, eu, ev, unit)
    masks = np.flatnonzero(flags).tolist()
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return non_edges, masks


def _as_completion(g: LabeledGraph, non_edges, mask: int) -> CompletionSet:
    pairs = [(g.vertices[i], g.vertices[j]) for b, (i, j) in enumerate(non_edges) if (mask >> b) & 1]
    return CompletionSet(g, frozenset(pairs))


def interval_completions(g: LabeledGraph, mode: str = "boxicity", config: OracleConfig | None = None) -> list[CompletionSet]:
    """Inclusion-minimal completion sets, by increasing size."""
    config = (config or OracleConfig()).with_mode(mode)
    non_edges, masks = _completion_masks(g, mode == "cubicity", config.max_non_edges)
    return [_as_completion(g, non_edges, m) for m in masks]


@dataclass(frozen=True)
class OracleResult:
    mode: str
    value: int | None
    status: str  # "exact" | "skipped"
    certificate: tuple[CompletionSet, ...] = ()
    non_edges: int = 0
    minimal_completions: int = 0
    max_k: int | None = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "certificate": [[list(p) for p in c.sorted_pairs()] for c in self.certificate],
            "status": self.status,
            "mode": self.mode,
            "non_edges": self.non_edges,
            "minimal_completions": self.minimal_completions,
        }
        if self.status == "skipped":
            out["greater_than"] = self.max_k
        return out


def exact_parameter(g: LabeledGraph, config: OracleConfig | None = None) -> OracleResult:
    config = config or OracleConfig()
    unit = config.mode == "cubicity"
    non_edges, masks = _completion_masks(g, unit, config.max_non_edges)
    if not non_edges:
        return OracleResult(config.mode, 0, "exact", (), 0, len(masks), config.max_k)
    universe = (1 << len(non_edges)) - 1
    broken = [universe & ~m for m in masks]
    search = CoverSearch(broken, universe)
    k = search.minimum(config.max_k)
    if k is None:
        return OracleResult(config.mode, None, "skipped", (), len(non_edges), len(masks), config.max_k)
    chosen = search.lexicographic_cover(k)
    certificate = tuple(_as_completion(g, non_edges, masks[i]) for i in chosen)
    result = OracleResult(config.mode, k, "exact", certificate, len(non_edges), len(masks), config.max_k)
    certificate_representation(g, result)
    return result


def exact_boxicity(g: LabeledGraph, config: OracleConfig | None = None) -> OracleResult:
    return exact_parameter(g, (config or OracleConfig()).with_mode("boxicity"))


def exact_cubicity(g: LabeledGraph, config: OracleConfig | None = None) -> OracleResult:
    return exact_parameter(g, (config or OracleConfig()).with_mode("cubicity"))


def certificate_representation(g: LabeledGraph, result: OracleResult) -> BoxRepresentation:
    """Box representation assembled from interval models of the certificate's
    supergraphs; raises VerificationError unless it reproduces ``g`` exactly."""
    from .representation import verify_representation

    boxes = {v: [] for v in g.vertices}
    for completion in result.certificate:
        sup = completion.graph()
        if result.mode == "cubicity" and not is_unit_interval_graph(sup):
            raise VerificationError("cubicity certificate contains a non-unit-interval supergraph")
        model = interval_model(sup)
        if model is None:
            raise VerificationError("certificate supergraph has no interval model")
        for v in g.vertices:
            boxes[v].append(model[v])
    rep = BoxRepresentation(len(result.certificate), {v: tuple(b) for v, b in boxes.items()})
    verdict = verify_representation(g, rep)
    if not verdict:
        raise VerificationError(f"certificate does not reproduce the graph: {verdict.kind} at {verdict.pair}")
    return rep


@dataclass(frozen=True)
class CertificationReport:
    m: tuple[int, ...]
    lower: int
    upper: int
    construction_dimension: int
    boxicity: int | None
    cubicity: int | None
    status: str  # "certified" | "skipped: oracle-infeasible"
    exact_asserted: bool

    def to_json(self) -> dict:
        return {
            "m": list(self.m),
            "lower": self.lower,
            "upper": self.upper,
            "construction_dimension": self.construction_dimension,
            "exact_boxicity": self.boxicity,
            "exact_cubicity": self.cubicity,
            "status": self.status,
            "exact_asserted": self.exact_asserted,
        }


def certify_representation_optimal(m, config: OracleConfig | None = None) -> CertificationReport:
    """Construction (upper), oracle (exact) and formula (lower) side by side.

    Checks lower <= box <= cub <= upper, and equality throughout when there
    are at most three exponents.  Oracle capacity errors turn into a
    "skipped" status; a violated inequality raises VerificationError.
    """
    import warnings

    from .bounds import bound_report
    from .families import build_tcc
    from .representation import CompleteGraphWarning, representation_for_tcc

    m = tuple(sorted(int(x) for x in m))
    report = bound_report(m)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CompleteGraphWarning)
        rep, _ = representation_for_tcc(m)
    g = build_tcc(m)
    config = config or OracleConfig()
    try:
        box = exact_boxicity(g, config)
        cub = exact_cubicity(g, config)
    except CapacityError:
        return CertificationReport(m, report.lower, report.upper, rep.dimension, None, None,
                                   "skipped: oracle-infeasible", False)
    if box.value is None or cub.value is None:
        return CertificationReport(m, report.lower, report.upper, rep.dimension, box.value, cub.value,
                                   "skipped: oracle-infeasible", False)
    if not report.lower <= box.value <= cub.value <= rep.dimension == report.upper:
        raise VerificationError(
            f"bound sandwich fails for m={list(m)}: lower {report.lower}, boxicity {box.value}, "
            f"cubicity {cub.value}, construction {rep.dimension}, upper {report.upper}"
        )
    exact = len(m) <= 3
    if exact and not box.value == cub.value == report.upper:
        raise VerificationError(f"exact value for m={list(m)} differs from the upper bound")
    return CertificationReport(m, report.lower, report.upper, rep.dimension, box.value, cub.value, "certified", exact)
