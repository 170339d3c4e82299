from __future__ import annotations

import pytest

from matrix import ALL_TYPES
from wallcrys.cartan import cartan_data, parse_type
from wallcrys.perfect import EMPTY, check_perfect, fundamental, perfect_crystal


def size(t):
    n = t.rank
    return {"An1": n + 1, "A2n-1_2": 2 * n, "Dn1": 2 * n, "A2n2": 2 * n + 1,
            "Dn+1_2": 2 * n + 2, "Bn1": 2 * n + 1}[t.family]


@pytest.mark.parametrize("name", ALL_TYPES)
def test_check_perfect_passes(name):
    rep = check_perfect(perfect_crystal(parse_type(name)))
    assert rep.ok, rep.failures


@pytest.mark.parametrize("name", ALL_TYPES)
def test_size_and_arrow_consistency(name):
    t = parse_type(name)
    B = perfect_crystal(t)
    assert len(B.elements) == len(set(B.elements)) == size(t)
    for b in B.elements:
        for i in t.index_set:
            y = B.f(b, i)
            if y is not None:
                assert B.e(y, i) == b
            assert B.phi(b, i) - B.eps(b, i) == B.weight(b)[i]


def test_a2n2_needs_node_n_for_the_cone():
    # leaving node 0 out of the cone fails the dominating-weight clause
    rep = check_perfect(perfect_crystal(parse_type("A4~2")), special=0)
    assert not rep.ok
    assert {c for c, _ in rep.failures} == {"iii"}


# [PAPER] minimal elements b^lambda (eps = lambda) and b_lambda (phi = lambda)
MINIMAL = {
    "A2~1": {0: ("1", "0"), 1: ("2", "1"), 2: ("0", "2")},
    "A5~2": {0: ("1", "-1"), 1: ("-1", "1")},
    "D4~1": {0: ("1", "-1"), 1: ("-1", "1"), 3: ("4", "-4"), 4: ("-4", "4")},
    "A4~2": {0: (EMPTY, EMPTY)},
    "D3~2": {0: (EMPTY, EMPTY), 2: ("0", "0")},
    "B3~1": {0: ("1", "-1"), 1: ("-1", "1"), 3: ("0", "0")},
}


@pytest.mark.parametrize("name", sorted(MINIMAL))
def test_minimal_elements(name):
    t = parse_type(name)
    B = perfect_crystal(t)
    for lam, (up, low) in MINIMAL[name].items():
        assert (B.b_upper(lam), B.b_lower(lam)) == (up, low)
        assert B.eps_vector(up) == fundamental(t, lam)
        assert B.phi_vector(low) == fundamental(t, lam)
    assert set(MINIMAL[name]) == set(cartan_data(t).level1_weights)


def test_d4_spin_arrows():
    B = perfect_crystal(parse_type("D4~1"))
    assert B.f("3", 3) == "4" and B.f("3", 4) == "-4"
    assert B.f("4", 4) == "-3" and B.f("-4", 3) == "-3"
    assert B.f("-1", 0) == "2" and B.f("-2", 0) == "1"
