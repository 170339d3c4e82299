"""The column-reading map from reduced proper Young walls to paths.

Each column is read from its top state alone: the state count modulo the
period and the alt flag select a box of the perfect crystal.  The tables
below are written out per family; ``verify_isomorphism`` is what certifies
them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .cartan import AffineType, cartan_data
from .crystal_core import CrystalGraph, generate_graph, reduce_signature
from .path_model import DomainError, Path, PathCrystal
from .perfect import EMPTY, bar
from .young_wall import Wall, YoungWallCrystal, unpack, wall_pattern


@dataclass(frozen=True)
class PsiTable:
    ctype: AffineType
    lam: int
    column_class: int
    images: tuple[str, ...]  # residue -> box
    alts: tuple[tuple[int, str], ...] = ()  # residue of an alt state -> box

    def lookup(self, s: int) -> str:
        c, alt = unpack(s)
        r = c % len(self.images)
        if alt:
            return dict(self.alts)[r]
        return self.images[r]


def _up(a: int, b: int) -> list[str]:
    return [str(j) for j in range(a, b + 1)]


def _down_bar(a: int, b: int) -> list[str]:
    return [bar(j) for j in range(a, b - 1, -1)]


def _swap_boxes(seq, pairs):
    table = {}
    for j in pairs:
        table[str(j)], table[bar(j)] = bar(j), str(j)
    return [table.get(x, x) for x in seq]


def _raw_tables(t: AffineType, lam: int) -> list[tuple[list[str], dict[int, str]]]:
    n, f = t.rank, t.family
    if f == "An1":
        return [([str((lam - k + r) % (n + 1)) for r in range(n + 1)], {}) for k in range(n + 1)]
    if f == "A2n2":
        return [([EMPTY, *_up(1, n), *_down_bar(n, 1)], {})]
    if f == "Dn+1_2":
        if lam == 0:
            return [([EMPTY, *_up(1, n), "0", *_down_bar(n, 1)], {})]
        return [(["0", *_down_bar(n, 1), EMPTY, *_up(1, n)], {})]

    def pair(images, alts, pairs):
        other = (_swap_boxes(images, pairs), dict(zip(alts, _swap_boxes(alts.values(), pairs))))
        return [(images, alts), other]

    if f in ("A2n-1_2", "Bn1") and lam in (0, 1):
        mid = ["0"] if f == "Bn1" else []
        out = pair([bar(1), *_up(2, n), *mid, *_down_bar(n, 2)], {0: "1"}, [1])
        return out if lam == 0 else out[::-1]
    if f == "Bn1":
        return pair(["0", *_down_bar(n, 2), bar(1), *_up(2, n)], {n: "1"}, [1])
    # Dn1
    if lam in (0, 1):
        out = pair([bar(1), *_up(2, n - 1), bar(n), *_down_bar(n - 1, 2)], {n - 1: str(n), 0: "1"}, [1, n])
        swap = [1] if lam == 1 else []
    else:
        out = pair([bar(n), *_down_bar(n - 1, 2), bar(1), *_up(2, n - 1)], {n - 1: "1", 0: str(n)}, [1, n])
        swap = [n] if lam == n else []
    return [(_swap_boxes(im, swap), dict(zip(al, _swap_boxes(al.values(), swap)))) for im, al in out]


def psi_tables(t: AffineType, lam: int) -> tuple[PsiTable, ...]:
    if lam not in cartan_data(t).level1_weights:
        raise DomainError(f"Lambda_{lam} is not a level-1 weight of {t}")
    return tuple(
        PsiTable(t, lam, k, tuple(images), tuple(sorted(alts.items())))
        for k, (images, alts) in enumerate(_raw_tables(t, lam))
    )


def mutate_tables(tables: tuple[PsiTable, ...], column_class: int, r1: int, r2: int) -> tuple[PsiTable, ...]:
    """Swap two residues of one table; a test hook for the verifier."""
    out = list(tables)
    tab = out[column_class]
    im = list(tab.images)
    im[r1], im[r2] = im[r2], im[r1]
    out[column_class] = replace(tab, images=tuple(im))
    return tuple(out)


class NotReduced(DomainError):
    pass


def psi(
    crystal: YoungWallCrystal,
    w: Wall,
    paths: PathCrystal | None = None,
    tables: tuple[PsiTable, ...] | None = None,
    check: bool = True,
) -> Path:
    if check and not (crystal.validate(w) and crystal.is_proper(w) and crystal.is_reduced(w)):
        raise NotReduced(f"{crystal.key(w)} is not a reduced proper wall")
    paths = paths or PathCrystal(crystal.ctype, crystal.lam)
    tables = tables or psi_tables(crystal.ctype, crystal.lam)
    m = len(tables)
    return paths.normalize(tuple(tables[k % m].lookup(s) for k, s in enumerate(w)))


@dataclass
class VerifyReport:
    ctype: str
    lam: int
    depth: int
    nodes: int = 0
    edges: int = 0
    status: str = "pass"
    counterexample_word: list[int] | None = None
    reason: str = ""
    per_depth: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        doc = {
            "type": self.ctype,
            "lambda": f"L{self.lam}",
            "depth": self.depth,
            "nodes": self.nodes,
            "edges": self.edges,
            "status": self.status,
        }
        if self.counterexample_word is not None:
            doc["counterexample_word"] = self.counterexample_word
            doc["reason"] = self.reason
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def verify_isomorphism(
    t: AffineType,
    lam: int,
    depth: int,
    tables: tuple[PsiTable, ...] | None = None,
    max_nodes: int | None = None,
) -> VerifyReport:
    """Bounded-depth check that the column reading is a crystal isomorphism."""
    walls = YoungWallCrystal(t, lam)
    paths = PathCrystal(t, lam)
    tables = tables or psi_tables(t, lam)
    report = VerifyReport(t.name, lam, depth)
    gw = generate_graph(walls, walls.root, depth, max_nodes)
    gp = generate_graph(paths, paths.root, depth, max_nodes)
    report.nodes, report.edges = len(gw.nodes), len(gw.edges)
    report.per_depth = gw.depth_counts()
    if gw.truncated or gp.truncated:
        report.status = "truncated"
        return report

    def fail(word, reason):
        report.status = "fail"
        report.counterexample_word = list(word)
        report.reason = reason
        return report

    image: dict[str, str] = {}
    owner: dict[str, str] = {}
    read = lambda w: psi(walls, w, paths, tables, check=False)  # noqa: E731
    for key, node in gw.nodes.items():
        p = read(node.element)
        pk = paths.key(p)
        if pk in owner:
            return fail(gw.word(key), f"{key} and {owner[pk]} both map to {pk}")
        owner[pk] = key
        image[key] = pk
        if pk not in gp.nodes:
            return fail(gw.word(key), f"{key} maps to {pk}, not a path at this depth")
    for key in sorted(gw.nodes, key=lambda k: (gw.nodes[k].depth, k)):
        node = gw.nodes[key]
        w, p = node.element, gp.nodes[image[key]].element
        word = gw.word(key)
        if walls.weight(w) != paths.weight(p):
            return fail(word, "weights differ")
        for i in t.index_set:
            if (walls.eps(w, i), walls.phi(w, i)) != (paths.eps(p, i), paths.phi(p, i)):
                return fail(word, f"eps/phi differ at i={i}")
            for op in ("f", "e"):
                a = getattr(walls, op)(w, i)
                b = getattr(paths, op)(p, i)
                if (a is None) != (b is None):
                    return fail(word + [i], f"{op}_{i} defined on one side only")
                if a is not None and paths.key(read(a)) != paths.key(b):
                    return fail(word + [i], f"{op}_{i} does not commute")
    if len(gw.nodes) != len(gp.nodes):
        return fail([], "node counts differ")
    return report


# ---------------------------------------------------------------------------
# B_n^(1): local signature tables

@dataclass
class CaseReport:
    ok: bool = True
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seen: dict[tuple[bool, bool, bool], set[str]] = field(default_factory=dict)


def _compare_tapes(walls: YoungWallCrystal, paths: PathCrystal, w: Wall, p: Path, i: int) -> str | None:
    """Compare reduced signatures and the acting column on both sides."""
    runs, wt, _, _ = walls.signature(w, i)
    width = len(runs) - 1
    n = len(p)
    pt = reduce_signature(
        [(0, paths.B.phi(paths.ground.elem(n), i))]
        + [(paths.B.eps(paths.entry(p, k), i), paths.B.phi(paths.entry(p, k), i)) for k in range(n - 1, -1, -1)]
    )
    if (wt.minus, wt.plus) != (pt.minus, pt.plus):
        return f"signature (-{wt.minus},+{wt.plus}) vs (-{pt.minus},+{pt.plus})"
    for name, a, b in (("e", wt.e_pos, pt.e_pos), ("f", wt.f_pos, pt.f_pos)):
        col_w = None if a is None else width - a
        col_p = None if b is None else n - b
        if col_w != col_p:
            return f"{name} acts on column {col_w} vs entry {col_p}"
    return None


def abc_segments(walls: YoungWallCrystal, w: Wall) -> dict[int, dict[str, list[int]]]:
    """Columns around each row of n-halves, for i = n in type B_n^(1).

    For the m-th pair of n-halves in the add-sequence, a column is in part A
    if the lower half is its next block, in part B if it is topped by that
    lower half and in part C if it is topped by both halves.  Pairs whose
    lower half is the ground block are skipped.
    """
    n = walls.ctype.rank
    pat0 = walls.pattern.column(0)
    period = pat0.period
    low = next(p for p, sl in enumerate(pat0.slots) if sl.color == n and sl.kind == "l")
    out: dict[int, dict[str, list[int]]] = {}
    for k in range(len(w) + 1):
        cnt, alt = unpack(walls.col(w, k))
        if alt or cnt == 0:
            continue
        for part, off in (("A", 0), ("B", 1), ("C", 2)):
            m, r = divmod(cnt - off - low, period)
            if r == 0 and m >= 0:
                out.setdefault(m, {}).setdefault(part, []).append(k)
    return out


ABC_TABLE: dict[tuple[bool, bool, bool], str] = {
    (True, True, True): "",
    (True, True, False): "++",
    (True, False, True): "",
    (True, False, False): "++",
    (False, True, True): "--",
    (False, True, False): "-+",
    (False, False, True): "--",
}


def case_table_check(t: AffineType, depth: int = 8) -> CaseReport:
    """Exhaustive local comparison for B_n^(1) on all generated walls.

    For every level-1 weight, every wall up to ``depth`` and every color the
    reduced wall signature and its acting column are compared with those of
    the path read off the wall.  For i = n the reduced signature is also
    compared with the A/B/C presence table.
    """
    if t.family != "Bn1":
        raise ValueError("case tables are stated for B_n^(1)")
    report = CaseReport()
    n = t.rank
    for lam in cartan_data(t).level1_weights:
        walls = YoungWallCrystal(t, lam)
        paths = PathCrystal(t, lam)
        tables = psi_tables(t, lam)
        g: CrystalGraph = generate_graph(walls, walls.root, depth)
        for node in g.nodes.values():
            w = node.element
            p = psi(walls, w, paths, tables, check=False)
            for i in t.index_set:
                report.checked += 1
                bad = _compare_tapes(walls, paths, w, p, i)
                if bad:
                    report.ok = False
                    report.failures.append(f"L{lam} {walls.key(w)} i={i}: {bad}")
            runs = walls.signature(w, n)[0]
            width = len(runs) - 1
            for parts in abc_segments(walls, w).values():
                cols = sorted((k for ks in parts.values() for k in ks), reverse=True)
                tape = reduce_signature([runs[width - k] for k in cols])
                sig = "-" * tape.minus + "+" * tape.plus
                present = tuple(p in parts for p in "ABC")
                report.seen.setdefault(present, set()).add(sig)
                if ABC_TABLE[present] != sig:
                    report.ok = False
                    report.failures.append(f"L{lam} {walls.key(w)}: parts {present} give {sig!r}")
    return report


def classes_of(t: AffineType, lam: int) -> int:
    return len(wall_pattern(t, lam).classes)
