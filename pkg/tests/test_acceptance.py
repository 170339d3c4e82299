"""Exit gate: one pass/fail line per acceptance criterion.

Run under pytest (lines are repeated in the terminal summary) or directly
with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from acceptance_log import record  # noqa: E402
from figures import PATH_FIGURES, WALL_FIGURES, compare, load  # noqa: E402
from matrix import ALL_TYPES, RANK_MINIMAL, TYPE_WEIGHTS  # noqa: E402
from wallcrys.cartan import parse_type  # noqa: E402
from wallcrys.correspondence import verify_isomorphism  # noqa: E402
from wallcrys.crystal_core import TensorProduct, check_axioms, generate_graph  # noqa: E402
from wallcrys.path_model import PathCrystal  # noqa: E402
from wallcrys.perfect import check_perfect, perfect_crystal  # noqa: E402
from wallcrys.young_wall import YoungWallCrystal, totals_by_blocks  # noqa: E402

SEED = 20261018
WORDS = 10_000
TRIPLES = 10_000


def _figures(model: str, names: list[str]):
    worst, bad, graphs = 0.0, [], []
    for name in names:
        t0 = time.perf_counter()
        diff = compare(model, name)
        worst = max(worst, time.perf_counter() - t0)
        graphs.append((model, name, diff.graph))
        if not diff.ok:
            bad.append(name)
    return worst, bad, graphs


def _depth(name: str) -> int:
    return 12 if name in RANK_MINIMAL else 8


def criterion_1():
    worst, bad, _ = _figures("path", PATH_FIGURES)
    ok = not bad and worst < 1.0
    record(1, ok, f"path figures {len(PATH_FIGURES) - len(bad)}/{len(PATH_FIGURES)} exact, slowest {worst:.2f}s"
           + (f", mismatched {bad}" if bad else ""))
    return ok


def criterion_2():
    worst, bad, _ = _figures("wall", WALL_FIGURES)
    ok = not bad and worst < 1.0
    record(2, ok, f"wall figures {len(WALL_FIGURES) - len(bad)}/{len(WALL_FIGURES)} exact, slowest {worst:.2f}s"
           + (f", mismatched {bad}" if bad else ""))
    return ok


def criterion_3():
    t0 = time.perf_counter()
    fails = []
    nodes = 0
    for name, lam in TYPE_WEIGHTS:
        rep = verify_isomorphism(parse_type(name), lam, _depth(name))
        nodes += rep.nodes
        if rep.status != "pass":
            fails.append(f"{name} L{lam}: {rep.status} {rep.reason}")
    dt = time.perf_counter() - t0
    ok = not fails and dt < 60
    record(3, ok, f"isomorphism on {len(TYPE_WEIGHTS)} (type, weight) pairs, {nodes} walls, "
           f"{len(fails)} counterexamples, {dt:.1f}s" + (f": {fails[:3]}" if fails else ""))
    return ok


def criterion_4():
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    violations, steps = [], 0
    for name, lam in TYPE_WEIGHTS:
        t = parse_type(name)
        y = YoungWallCrystal(t, lam)
        good: set = {y.root}
        colors = list(t.index_set)
        for _ in range(WORDS):
            w = y.root
            for _ in range(rng.randint(1, 12)):
                op = y.f if rng.random() < 0.7 else y.e
                nxt = op(w, rng.choice(colors))
                if nxt is None:
                    continue
                w = nxt
                steps += 1
                if w not in good:
                    if y.validate(w) and y.is_proper(w) and y.is_reduced(w):
                        good.add(w)
                    else:
                        violations.append(f"{name} L{lam} {y.key(w)}")
    dt = time.perf_counter() - t0
    ok = not violations
    record(4, ok, f"{WORDS} random words per pair, {steps} steps, {len(violations)} violations, {dt:.1f}s")
    return ok


def criterion_5():
    bad = []
    count = 0
    graphs = _figures("path", PATH_FIGURES)[2] + _figures("wall", WALL_FIGURES)[2]
    for model, name, g in graphs:
        doc = load(f"{model}_{name}")
        t, lam = parse_type(doc["type"]), int(doc["lambda"][1:])
        c = PathCrystal(t, lam) if model == "path" else YoungWallCrystal(t, lam)
        bad += check_axioms(c, g)
        count += len(g.nodes)
    for name, lam in TYPE_WEIGHTS:
        t = parse_type(name)
        for c in (YoungWallCrystal(t, lam), PathCrystal(t, lam)):
            g = generate_graph(c, c.root, _depth(name))
            bad += check_axioms(c, g)
            count += len(g.nodes)
    ok = not bad
    record(5, ok, f"crystal axioms on {count} nodes, {len(bad)} violations" + (f": {bad[:3]}" if bad else ""))
    return ok


def criterion_6():
    bad = []
    for name in ALL_TYPES:
        rep = check_perfect(perfect_crystal(parse_type(name)))
        bad += [f"{name} ({c}) {w}" for c, w in rep.failures]
    ok = not bad
    record(6, ok, f"perfectness on {len(ALL_TYPES)} types, {len(bad)} violations" + (f": {bad[:3]}" if bad else ""))
    return ok


def criterion_7():
    rng = random.Random(SEED)
    bad = 0
    for name in ALL_TYPES:
        B = perfect_crystal(parse_type(name))
        left = TensorProduct([TensorProduct([B, B]), B])
        right = TensorProduct([B, TensorProduct([B, B])])
        for _ in range(TRIPLES):
            x, y, z = (rng.choice(B.elements) for _ in range(3))
            for i in B.ctype.index_set:
                for op in ("e", "f"):
                    a = getattr(left, op)(((x, y), z), i)
                    b = getattr(right, op)((x, (y, z)), i)
                    fa = None if a is None else (*a[0], a[1])
                    fb = None if b is None else (b[0], *b[1])
                    bad += fa != fb
    ok = bad == 0
    record(7, ok, f"{TRIPLES} random triples per type on {len(ALL_TYPES)} types, {bad} violations")
    return ok


def criterion_8():
    bad = []
    for name, lam in TYPE_WEIGHTS:
        t = parse_type(name)
        p = PathCrystal(t, lam)
        want = generate_graph(p, p.root, 8).depth_counts()
        got = totals_by_blocks(t, lam, 8)
        if got != want:
            bad.append(f"{name} L{lam}: {got} vs {want}")
    ok = not bad
    record(8, ok, f"block totals vs path depth counts to 8 on {len(TYPE_WEIGHTS)} pairs, "
           f"{len(bad)} mismatches" + (f": {bad[:2]}" if bad else ""))
    return ok


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


def test_criterion_1_path_figures():
    assert criterion_1()


def test_criterion_2_wall_figures():
    assert criterion_2()


def test_criterion_3_isomorphism():
    assert criterion_3()


def test_criterion_4_closure():
    assert criterion_4()


def test_criterion_5_axioms():
    assert criterion_5()


def test_criterion_6_perfectness():
    assert criterion_6()


def test_criterion_7_associativity():
    assert criterion_7()


def test_criterion_8_characters():
    assert criterion_8()


if __name__ == "__main__":
    results = [crit() for crit in CRITERIA]
    sys.exit(0 if all(results) else 1)
