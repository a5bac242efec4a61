import itertools

import numpy as np
import pytest

from boxikit.errors import CapacityError, InputError
from boxikit.families import divisors, exponents_of
from boxikit.posets import (
    LinearExtension,
    Poset,
    Realizer,
    build_divisibility_realizer,
    comparability_graph,
    divisibility_poset,
    exact_poset_dimension,
    linear_extensions,
    longest_chain,
    verify_realizer,
)


def brute_extensions(p: Poset):
    out = []
    for perm in itertools.permutations(range(p.size)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[i] < pos[j] for i, j in zip(*np.nonzero(p.less))):
            out.append(perm)
    return out


def brute_dimension(p: Poset) -> int:
    exts = brute_extensions(p)
    less = {(i, j) for i, j in zip(*np.nonzero(p.less))}
    for k in range(1, len(exts) + 1):
        for combo in itertools.combinations(exts, k):
            pos = [{v: i for i, v in enumerate(e)} for e in combo]
            inter = {
                (i, j) for i in range(p.size) for j in range(p.size) if i != j and all(q[i] < q[j] for q in pos)
            }
            if inter == less:
                return k
    raise AssertionError


def test_standard_example_dimension_three():
    # S_3: a_i < b_j for i != j
    ground = ["a0", "a1", "a2", "b0", "b1", "b2"]
    pairs = [(f"a{i}", f"b{j}") for i in range(3) for j in range(3) if i != j]
    p = Poset.from_pairs(ground, pairs)
    assert exact_poset_dimension(p) == 3 == brute_dimension(p)


def test_rejects_non_orders():
    with pytest.raises(InputError):
        Poset(("a", "b"), np.array([[0, 1], [1, 0]], bool))
    with pytest.raises(InputError):
        Poset(("a", "b", "c"), np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], bool))


def test_realizer_for_six():
    r = build_divisibility_realizer(6)
    assert r.to_json() == {"extensions": [["1", "3", "2", "6"], ["1", "2", "3", "6"]]}
    assert Realizer.from_json(r.to_json()) == r


def test_realizers_verify_up_to_200():
    for n in range(1, 201):
        r = build_divisibility_realizer(n)
        assert len(r) == exponents_of(n).omega
        if n > 1:
            assert verify_realizer(divisibility_poset(divisors(n)), r)


def test_bad_realizer_is_caught():
    p = divisibility_poset(divisors(6))
    one = Realizer((LinearExtension(("1", "2", "3", "6")),))
    v = verify_realizer(p, one)
    assert not v and v.kind == "pair-not-reversed" and v.pair == ("2", "3")
    wrong = Realizer((LinearExtension(("2", "1", "3", "6")), LinearExtension(("1", "3", "2", "6"))))
    assert verify_realizer(p, wrong).kind == "extension-violation"


@pytest.mark.parametrize("n", [6, 10, 12, 18, 20, 30])
def test_dimension_matches_brute_force(n):
    p = divisibility_poset(divisors(n))
    assert len(list(linear_extensions(p))) == len(brute_extensions(p))
    assert exact_poset_dimension(p) == brute_dimension(p) == exponents_of(n).omega


def test_dimension_of_sixty():
    assert exact_poset_dimension(divisibility_poset(divisors(60))) == 3


def test_chain_has_dimension_one():
    p = divisibility_poset([1, 2, 4, 8])
    assert p.is_chain() and exact_poset_dimension(p) == 1


def test_extension_cap():
    p = divisibility_poset(divisors(60))
    with pytest.raises(CapacityError):
        exact_poset_dimension(p, cap_extensions=100)


def test_longest_chain_and_graph():
    p = divisibility_poset(divisors(360))
    assert longest_chain(p) == 3 + 2 + 1 + 1
    g = comparability_graph(p)
    assert g.has_edge("2", "360") and not g.has_edge("8", "9")


def test_interval_ground_set_is_accepted():
    # divisibility on (n/2, n]: an antichain
    p = divisibility_poset(range(11, 21))
    assert longest_chain(p) == 1
    assert exact_poset_dimension(divisibility_poset(range(6, 11))) == 2
