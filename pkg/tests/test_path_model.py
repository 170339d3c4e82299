from __future__ import annotations

import pytest

from matrix import TYPE_WEIGHTS
from wallcrys.cartan import parse_type
from wallcrys.crystal_core import generate_graph
from wallcrys.path_model import DomainError, PathCrystal, ground_state, parse_path_key

# [PAPER] ground-state paths, written (... p(2) p(1) p(0))
GROUND = [
    ("A2~1", 0, "1 2 0 1 2 0"),
    ("A2~1", 1, "2 0 1 2 0 1"),
    ("A3~1", 2, "3 0 1 2 3 0 1 2"),
    ("A5~2", 0, "1 -1 1 -1"),
    ("A5~2", 1, "-1 1 -1 1"),
    ("D4~1", 0, "1 -1 1 -1"),
    ("D4~1", 1, "-1 1 -1 1"),
    ("D4~1", 3, "4 -4 4 -4"),
    ("D4~1", 4, "-4 4 -4 4"),
    ("B3~1", 0, "1 -1 1 -1"),
    ("B3~1", 3, "0 0 0 0"),
    ("A4~2", 0, "∅ ∅ ∅ ∅"),
    ("D3~2", 0, "∅ ∅ ∅ ∅"),
    ("D3~2", 2, "0 0 0 0"),
]


@pytest.mark.parametrize("name,lam,shown", GROUND)
def test_ground_state_paths(name, lam, shown):
    c = PathCrystal(parse_type(name), lam)
    entries = shown.split()
    assert c.display(c.root, len(entries)) == tuple(entries)


@pytest.mark.parametrize("name,lam", TYPE_WEIGHTS)
def test_ground_path_is_highest_weight(name, lam):
    t = parse_type(name)
    c = PathCrystal(t, lam)
    assert all(c.e(c.root, i) is None for i in t.index_set)
    assert c.weight(c.root) == tuple(int(i == lam) for i in t.index_set)
    assert all(c.phi(c.root, i) == int(i == lam) for i in t.index_set)


@pytest.mark.parametrize("name,lam", TYPE_WEIGHTS)
def test_window_does_not_matter(name, lam):
    t = parse_type(name)
    c = PathCrystal(t, lam)
    g = generate_graph(c, c.root, 5)
    for node in g.nodes.values():
        p = node.element
        for extra in (1, ground_state(t, lam).period + 1):
            win = len(p) + extra
            for i in t.index_set:
                assert c.eps(p, i, win) == c.eps(p, i)
                assert c.phi(p, i, win) == c.phi(p, i)
                assert c.f(p, i, win) == c.f(p, i)
                assert c.e(p, i, win) == c.e(p, i)
            assert c.weight(p, win) == c.weight(p)


def test_normalize_strips_ground_tail():
    c = PathCrystal(parse_type("B3~1"), 0)
    assert c.normalize(("2", "1", "-1", "1")) == ("2",)
    assert c.normalize(("-1", "1")) == ()
    assert c.normalize(c.normalize(("2", "3", "-1"))) == ("2", "3")


def test_first_steps_a2():
    c = PathCrystal(parse_type("A2~1"), 0)
    p = c.f(c.root, 0)
    assert p == ("1",)
    assert c.f(c.root, 1) is None and c.f(c.root, 2) is None
    assert c.f(p, 1) == ("2",) and c.f(p, 2) == ("1", "0")
    assert c.e(p, 0) == ()


def test_key_round_trip_and_injective():
    c = PathCrystal(parse_type("D4~1"), 3)
    g = generate_graph(c, c.root, 6)
    assert len({n.key for n in g.nodes.values()}) == len(g.nodes)
    for node in g.nodes.values():
        assert parse_path_key(node.key) == node.element
    assert c.key(c.root) == "()"


def test_unsupported_weight():
    with pytest.raises(DomainError):
        ground_state(parse_type("D4~1"), 2)
