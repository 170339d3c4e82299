from __future__ import annotations

import json

import pytest

from wallcrys.cartan import parse_type
from wallcrys.crystal_core import (
    IncomparableGraphs,
    TensorProduct,
    check_axioms,
    generate_graph,
    graphs_bisimilar,
    reduce_signature,
    to_dot,
    to_json,
)
from wallcrys.path_model import PathCrystal
from wallcrys.perfect import perfect_crystal
from wallcrys.young_wall import YoungWallCrystal


@pytest.mark.parametrize("runs,minus,plus,e_pos,f_pos", [
    ([], 0, 0, None, None),
    ([(0, 1), (1, 0)], 0, 0, None, None),       # + - cancels
    ([(1, 0), (0, 1)], 1, 1, 0, 1),             # - + survives
    ([(0, 2), (1, 0)], 0, 1, None, 0),
    ([(0, 1), (2, 0), (0, 1)], 1, 1, 1, 2),
    ([(1, 1), (1, 1)], 1, 1, 0, 1),
])
def test_reduce_signature(runs, minus, plus, e_pos, f_pos):
    tape = reduce_signature(runs)
    assert (tape.minus, tape.plus, tape.e_pos, tape.f_pos) == (minus, plus, e_pos, f_pos)


def test_tensor_of_two_a1_boxes():
    B = perfect_crystal(parse_type("A1~1"))
    BB = TensorProduct([B, B])
    # "++": f_1 acts on the left-most +
    assert BB.f(("1", "1"), 1) == ("0", "1")
    # "-+": nothing cancels, the + sits on the right factor
    assert BB.f(("0", "1"), 1) == ("0", "0")
    assert BB.f(("0", "0"), 1) is None
    # "--": e_1 acts on the right-most -
    assert BB.e(("0", "0"), 1) == ("0", "1")
    # "+-" cancels
    assert BB.e(("1", "0"), 1) is None and BB.f(("1", "0"), 1) is None
    assert BB.weight(("1", "1")) == (-2, 2)


def test_generate_graph_levels_and_words():
    c = PathCrystal(parse_type("A2~1"), 0)
    g = generate_graph(c, c.root, 3)
    assert g.depth_counts() == [1, 1, 2, 2]
    assert g.max_depth == 3 and not g.truncated
    for key, node in g.nodes.items():
        assert len(g.word(key)) == node.depth
    assert check_axioms(c, g) == []


def test_depth_zero_is_single_node():
    c = YoungWallCrystal(parse_type("B3~1"), 0)
    g = generate_graph(c, c.root, 0)
    assert list(g.nodes) == [c.key(c.root)] and g.edges == []


def test_truncation_flag():
    c = PathCrystal(parse_type("D4~1"), 0)
    g = generate_graph(c, c.root, 8, max_nodes=10)
    assert g.truncated and len(g.nodes) <= 10


def test_bisimulation_between_models():
    t = parse_type("D3~2")
    gw = generate_graph(YoungWallCrystal(t, 0), (), 6)
    gp = generate_graph(PathCrystal(t, 0), (), 6)
    assert graphs_bisimilar(gw, gp)


def test_bisimulation_detects_difference():
    t = parse_type("D3~2")
    gw = generate_graph(YoungWallCrystal(t, 0), (), 5)
    gp = generate_graph(PathCrystal(t, 2), (), 5)
    res = graphs_bisimilar(gw, gp)
    assert not res and res.reason


def test_bisimulation_needs_equal_depths():
    t = parse_type("A2~1")
    with pytest.raises(IncomparableGraphs):
        graphs_bisimilar(generate_graph(PathCrystal(t, 0), (), 2), generate_graph(PathCrystal(t, 0), (), 3))


def test_serializations_are_deterministic():
    t = parse_type("B3~1")
    a = generate_graph(YoungWallCrystal(t, 3), (), 5)
    b = generate_graph(YoungWallCrystal(t, 3), (), 5)
    assert to_json(a) == to_json(b) and to_dot(a) == to_dot(b)
    doc = json.loads(to_json(a, {"type": "B3~1"}))
    assert doc["type"] == "B3~1"
    assert len(doc["nodes"]) == len(a.nodes) and len(doc["edges"]) == len(a.edges)
    assert to_dot(a).startswith("digraph")
