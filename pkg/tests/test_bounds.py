import itertools
from fractions import Fraction

import pytest

from boxikit.bounds import (
    bound_report,
    comparison_for_n,
    comparison_quantities,
    extract_crown,
    extract_witness,
    general_lower_bound,
    lower_bound,
    upper_bound,
    witness_components,
)
from boxikit.errors import InputError
from boxikit.families import build_crown
from boxikit.isomorphism import are_isomorphic


def sweep(max_d=4, max_m=3):
    for d in range(2, max_d + 1):
        yield from (list(m) for m in itertools.combinations_with_replacement(range(1, max_m + 1), d))


@pytest.mark.parametrize(
    "m, lower, upper",
    [
        ([1, 1], 1, 1),
        ([2, 5], 2, 2),
        ([1, 1, 1], 2, 2),
        ([1, 2, 3], 3, 3),
        ([1, 1, 1, 1], 2, 3),
        ([1, 2, 3, 4], 5, 6),
        ([1, 2, 3, 4, 5], 1 + 3 + 4, 10),
    ],
)
def test_formulas(m, lower, upper):
    assert lower_bound(m) == lower
    assert upper_bound(m) == upper


def test_input_checks():
    with pytest.raises(InputError):
        upper_bound([])
    with pytest.raises(InputError):
        upper_bound([2, 1])
    with pytest.raises(InputError):
        lower_bound([3])
    assert upper_bound([3]) == 0


def test_general_bound_reduces_to_closed_form():
    for d in range(2, 7):
        for m in itertools.combinations_with_replacement(range(1, 5), d):
            assert general_lower_bound(m) == lower_bound(m)
            assert lower_bound(m) <= upper_bound(m)


def test_general_bound_with_other_f():
    # f(s) = s - 1 as a hypothetical sharper input
    assert general_lower_bound([1, 2, 2], lambda s: s - 1) == 1 * 2 + 1 * 1


def test_comparison_quantities():
    c = comparison_quantities([1, 2, 3])
    assert c.eq1 == 18 and c.eq3 == Fraction(3, 2)
    assert c.eq2 == 18 * 5  # 24 vertices, ceil(log2 24) = 5
    assert comparison_quantities([1]).eq2 == 1  # 2 vertices
    assert comparison_for_n(360) == comparison_quantities([3, 2, 1])
    with pytest.raises(InputError):
        comparison_for_n(1)


def test_report_json():
    data = bound_report([1, 2, 2]).to_json()
    assert data["lower"] == 3 and data["upper"] == 3 and data["eq3"] == "3/2" and data["chain"] == 6
    assert bound_report([4]).lower == 0


def test_witness_examples():
    comps = witness_components([1, 2, 2])
    assert [(c.dimension, c.level, len(c.vertices)) for c in comps] == [(3, 1, 6), (2, 2, 2)]
    assert set(comps[1].vertices) == {"(1,1,2)", "(1,2,1)"}
    comps = witness_components([2, 2])
    assert [len(c.vertices) for c in comps] == [2, 2]
    w = extract_witness([1, 1, 1])
    assert len(w.components) == 1 and len(w.components[0].vertices) == 6


def test_witness_sweep():
    for m in sweep():
        w = extract_witness(m)
        assert w.join_verified and w.isomorphism_verified
        assert w.weighted_sum() == lower_bound(m)


@pytest.mark.parametrize("s", range(3, 9))
def test_crowns(s):
    c = extract_crown(s)
    assert are_isomorphic(c.graph, build_crown(s)) is not None
    for a, b in c.matching:
        assert not c.graph.has_edge(a, b)
    assert len(c.a) == len(c.b) == s


def test_crown_four_structure():
    c = extract_crown(4)
    assert (c.graph.n, c.graph.edge_count) == (8, 12)
