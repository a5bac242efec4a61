import itertools
import random

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from boxikit import _kernels
from boxikit.errors import CapacityError, InputError
from boxikit.families import build_crown, build_tcc
from boxikit.graph import (
    LabeledGraph,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    intersection_graph,
    join_graphs,
    path_graph,
    star_graph,
    strip_universal,
)
from boxikit.oracle import (
    OracleConfig,
    certificate_representation,
    certify_representation_optimal,
    exact_boxicity,
    exact_cubicity,
    interval_completions,
)
from boxikit.recognition import graph_rows, is_interval_graph, is_unit_interval_graph
from boxikit.representation import verify_representation
from conftest import atlas, brute_parameter

SMALL = [g for g in atlas(6) if len(g.non_edges()) <= 6]


def test_complete_graphs():
    for n in range(1, 6):
        assert exact_boxicity(complete_graph(n)).value == 0
        assert exact_cubicity(complete_graph(n)).value == 0


@pytest.mark.parametrize(
    "g, box, cub",
    [
        (cycle_graph(4), 2, 2),
        (star_graph(3), 1, 2),
        (path_graph(5), 1, 1),
        (build_tcc([2, 2]), 2, 2),
        (build_crown(3), 2, 2),
    ],
)
def test_known_values(g, box, cub):
    assert exact_boxicity(g).value == box
    assert exact_cubicity(g).value == cub


def test_claw_cubicity_completions_are_nonempty():
    comps = interval_completions(star_graph(3), "cubicity")
    assert comps and all(c.added for c in comps)
    assert [c.added for c in interval_completions(star_graph(3), "boxicity")] == [frozenset()]


def test_against_brute_force():
    for g in SMALL:
        assert exact_boxicity(g).value == brute_parameter(g, unit=False), g.to_json()
        assert exact_cubicity(g).value == brute_parameter(g, unit=True), g.to_json()


def test_recognition_agreement():
    for g in atlas(7):
        if len(g.non_edges()) > 12:
            continue
        assert (exact_boxicity(g).value <= 1) == is_interval_graph(g)
        assert (exact_cubicity(g).value <= 1) == is_unit_interval_graph(g)


def test_certificate_soundness():
    g = build_tcc([1, 1, 1])
    for mode in ("boxicity", "cubicity"):
        result = exact_boxicity(g) if mode == "boxicity" else exact_cubicity(g)
        assert intersection_graph([c.graph() for c in result.certificate]) == g
        assert verify_representation(g, certificate_representation(g, result))


def test_certificate_is_deterministic():
    g = build_crown(4)
    a, b = exact_boxicity(g).to_json(), exact_boxicity(g).to_json()
    assert a == b and a["status"] == "exact" and a["value"] == 2


def test_join_additivity():
    parts = {
        "K1": complete_graph(1),
        "K2": complete_graph(2),
        "2K1": empty_graph(2),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
    }
    values = {k: exact_boxicity(g).value for k, g in parts.items()}
    for (ka, a), (kb, b) in itertools.combinations_with_replacement(parts.items(), 2):
        j = join_graphs([a.relabel({v: "a" + v for v in a.vertices}), b.relabel({v: "b" + v for v in b.vertices})])
        assert exact_boxicity(j).value == values[ka] + values[kb], (ka, kb)


def test_max_k_and_caps():
    result = exact_boxicity(join_graphs([cycle_graph(4, "a"), cycle_graph(4, "b")]), OracleConfig(max_k=3))
    assert result.status == "skipped" and result.value is None and result.to_json()["greater_than"] == 3
    with pytest.raises(CapacityError):
        exact_boxicity(build_tcc([1, 1, 1, 1]))
    with pytest.raises(InputError):
        OracleConfig(max_non_edges=99)
    with pytest.raises(CapacityError):
        exact_cubicity(path_graph(70), OracleConfig(max_non_edges=24))


def test_env_override(monkeypatch):
    monkeypatch.setenv("BOXIKIT_MAX_NONEDGES", "3")
    with pytest.raises(CapacityError):
        exact_boxicity(cycle_graph(5))
    monkeypatch.setenv("BOXIKIT_MAX_NONEDGES", "many")
    with pytest.raises(InputError):
        OracleConfig()


def test_universal_vertices_beyond_jit_width():
    g = join_graphs([cycle_graph(4, "c"), empty_graph(2, "e"), complete_graph(60, "k")])
    assert exact_boxicity(g).value == 3


def test_fallback_kernel_agrees():
    import numpy as np

    fast = _kernels.minimal_completion_masks
    slow = _kernels.pure("minimal_completion_masks")
    for g in atlas(6)[::5]:
        ne = g.non_edges()
        if len(ne) > 10:
            continue
        eu = np.array([i for i, _ in ne], dtype=np.int64)
        ev = np.array([j for _, j in ne], dtype=np.int64)
        rows = graph_rows(g)
        for unit in (False, True):
            a = fast(rows, g.n, eu, ev, unit)
            b = slow([int(r) for r in rows], g.n, eu.tolist(), ev.tolist(), unit)
            assert np.array_equal(a, b)


def test_certify_examples():
    r = certify_representation_optimal([1, 1, 1])
    assert (r.lower, r.boxicity, r.cubicity, r.upper, r.status) == (2, 2, 2, 2, "certified")
    r = certify_representation_optimal([1, 2])
    assert (r.lower, r.boxicity, r.upper) == (1, 1, 1)
    r = certify_representation_optimal([1, 1, 1, 1])
    assert (r.lower, r.upper, r.status) == (2, 3, "skipped: oracle-infeasible")


def test_box_at_most_cub_on_atlas():
    for g in atlas(6):
        if len(g.non_edges()) <= 10:
            assert exact_boxicity(g).value <= exact_cubicity(g).value


def test_universal_vertex_invariance_on_atlas():
    for g in atlas(6):
        if len(g.non_edges()) <= 10 and g.n:
            h = strip_universal(g)
            assert exact_boxicity(g).value == exact_boxicity(h).value


def test_stripping_changes_cubicity_of_claw():
    # boxicity ignores universal vertices, cubicity does not
    claw = star_graph(3)
    assert exact_cubicity(claw).value == 2
    assert exact_cubicity(strip_universal(claw)).value == 1


@st.composite
def graphs_with_subsets(draw):
    n = draw(st.integers(2, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = LabeledGraph.from_index_pairs([f"v{i}" for i in range(n)], [p for p, b in zip(pairs, bits) if b])
    keep = draw(st.lists(st.sampled_from(g.vertices), unique=True, min_size=1))
    return g, keep


@given(graphs_with_subsets())
@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
def test_monotone_under_induced_subgraphs(case):
    g, keep = case
    if len(g.non_edges()) > 12:
        return
    h = induced_subgraph(g, keep)
    assert exact_boxicity(h).value <= exact_boxicity(g).value
    assert exact_cubicity(h).value <= exact_cubicity(g).value


def test_env_flag_selects_pure_path():
    import os
    import subprocess
    import sys

    code = (
        "from boxikit._accel import NUMBA_ENABLED; from boxikit.families import build_crown;"
        "from boxikit.oracle import exact_boxicity, exact_cubicity;"
        "g = build_crown(3); print(NUMBA_ENABLED, exact_boxicity(g).value, exact_cubicity(g).value)"
    )
    env = dict(os.environ, BOXIKIT_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "2", "2"]
