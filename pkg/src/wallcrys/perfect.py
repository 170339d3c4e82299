"""Level-1 perfect crystals for the six affine families.

Elements are short strings: ``"j"`` for the box j, ``"-j"`` for the barred
box, ``"0"`` for the zero box and ``"∅"`` for the empty element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .cartan import AffineType, cartan_data
from .crystal_core import TensorProduct

EMPTY = "∅"


def bar(j: int) -> str:
    return f"-{j}"


def _arrows(t: AffineType) -> tuple[list[str], list[tuple[str, int, str]]]:
    n, f = t.rank, t.family
    boxes = [str(j) for j in range(1, n + 1)]
    bars = [bar(j) for j in range(n, 0, -1)]
    arrows = [(str(j), j, str(j + 1)) for j in range(1, n)]
    down = [(bar(j + 1), j, bar(j)) for j in range(n - 1, 0, -1)]
    zero_split = [(bar(1), 0, "2"), (bar(2), 0, "1")]
    zero_empty = [(EMPTY, 0, "1"), (bar(1), 0, EMPTY)]
    if f == "An1":
        arrows = [(str(j), j, str(j + 1)) for j in range(1, n)]
        arrows += [(str(n), n, "0"), ("0", 0, "1")]
        return [*boxes, "0"], arrows
    if f == "A2n-1_2":
        return boxes + bars, arrows + [(str(n), n, bar(n))] + down + zero_split
    if f == "Dn1":
        arrows = [(str(j), j, str(j + 1)) for j in range(1, n - 1)]
        spin = [
            (str(n - 1), n - 1, str(n)),
            (str(n - 1), n, bar(n)),
            (str(n), n, bar(n - 1)),
            (bar(n), n - 1, bar(n - 1)),
        ]
        down = [(bar(j + 1), j, bar(j)) for j in range(n - 2, 0, -1)]
        return boxes + bars, arrows + spin + down + zero_split
    if f == "A2n2":
        return boxes + bars + [EMPTY], arrows + [(str(n), n, bar(n))] + down + zero_empty
    if f == "Dn+1_2":
        mid = [(str(n), n, "0"), ("0", n, bar(n))]
        return boxes + ["0"] + bars + [EMPTY], arrows + mid + down + zero_empty
    mid = [(str(n), n, "0"), ("0", n, bar(n))]
    return boxes + ["0"] + bars, arrows + mid + down + zero_split


def _minimal(t: AffineType) -> dict[int, tuple[str, str]]:
    """level-1 weight index -> (b^lambda, b_lambda)."""
    n, f = t.rank, t.family
    if f == "An1":
        return {i: (str((i + 1) % (n + 1)), str(i)) for i in range(n + 1)}
    if f in ("A2n-1_2", "Bn1", "Dn1"):
        table = {0: ("1", bar(1)), 1: (bar(1), "1")}
        if f == "Dn1":
            table[n - 1] = (str(n), bar(n))
            table[n] = (bar(n), str(n))
        if f == "Bn1":
            table[n] = ("0", "0")
        return table
    if f == "A2n2":
        return {0: (EMPTY, EMPTY)}
    return {0: (EMPTY, EMPTY), n: ("0", "0")}


class PerfectCrystal:
    """A finite classical crystal given by its arrow table."""

    def __init__(self, t: AffineType, elements, arrows, minimal):
        self.ctype = t
        self.elements: tuple[str, ...] = tuple(elements)
        self.arrows: tuple[tuple[str, int, str], ...] = tuple(arrows)
        self.minimal: dict[int, tuple[str, str]] = dict(minimal)
        self._f = {(s, i): d for s, i, d in self.arrows}
        self._e = {(d, i): s for s, i, d in self.arrows}
        idx = t.index_set
        self._eps = {b: tuple(self._walk(self._e, b, i) for i in idx) for b in self.elements}
        self._phi = {b: tuple(self._walk(self._f, b, i) for i in idx) for b in self.elements}

    @staticmethod
    def _walk(table: dict, b: str, i: int) -> int:
        steps = 0
        while (b, i) in table:
            b = table[(b, i)]
            steps += 1
        return steps

    def e(self, b: str, i: int) -> str | None:
        return self._e.get((b, i))

    def f(self, b: str, i: int) -> str | None:
        return self._f.get((b, i))

    def eps(self, b: str, i: int) -> int:
        return self._eps[b][i]

    def phi(self, b: str, i: int) -> int:
        return self._phi[b][i]

    def eps_vector(self, b: str) -> tuple[int, ...]:
        return self._eps[b]

    def phi_vector(self, b: str) -> tuple[int, ...]:
        return self._phi[b]

    def weight(self, b: str) -> tuple[int, ...]:
        return tuple(p - m for p, m in zip(self._phi[b], self._eps[b]))

    def key(self, b: str) -> str:
        return b

    def b_upper(self, lam: int) -> str:
        return self.minimal[lam][0]

    def b_lower(self, lam: int) -> str:
        return self.minimal[lam][1]


@lru_cache(maxsize=None)
def perfect_crystal(t: AffineType) -> PerfectCrystal:
    elements, arrows = _arrows(t)
    return PerfectCrystal(t, elements, arrows, _minimal(t))


def eps_phi(b: str, i: int, data: PerfectCrystal) -> tuple[int, int]:
    return data.eps(b, i), data.phi(b, i)


def classical_wt(b: str, data: PerfectCrystal) -> tuple[int, ...]:
    return data.weight(b)


def fundamental(t: AffineType, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in t.index_set)


@dataclass
class PerfectReport:
    ok: bool = True
    failures: list[tuple[str, str]] = field(default_factory=list)

    def fail(self, clause: str, witness: str) -> None:
        self.ok = False
        self.failures.append((clause, witness))


def _solve_nonneg(columns: list[tuple[int, ...]], target: tuple[int, ...]) -> bool:
    """Is ``target`` a nonnegative integer combination of ``columns``?

    Gaussian elimination over the rationals; the columns used here are
    linearly independent so the solution is unique when it exists.
    """
    rows, cols = len(target), len(columns)
    m = [[Fraction(columns[c][r]) for c in range(cols)] + [Fraction(target[r])] for r in range(rows)]
    piv_row = 0
    for c in range(cols):
        p = next((r for r in range(piv_row, rows) if m[r][c] != 0), None)
        if p is None:
            continue
        m[piv_row], m[p] = m[p], m[piv_row]
        lead = m[piv_row][c]
        m[piv_row] = [x / lead for x in m[piv_row]]
        for r in range(rows):
            if r != piv_row and m[r][c] != 0:
                fac = m[r][c]
                m[r] = [x - fac * y for x, y in zip(m[r], m[piv_row])]
        piv_row += 1
    if any(m[r][-1] != 0 for r in range(piv_row, rows)):
        return False
    sol = [m[r][-1] for r in range(piv_row)]
    return all(x.denominator == 1 and x >= 0 for x in sol)


def default_special_node(t: AffineType) -> int:
    """Node left out of the cone in condition (iii).

    For A_{2n}^(2) the weights of B differ by half of alpha_n when node 0 is
    left out, so the integral cone only closes up around node n.
    """
    return t.rank if t.family == "A2n2" else 0


def check_perfect(data: PerfectCrystal, level: int = 1, special: int | None = None) -> PerfectReport:
    """Check conditions (ii)-(v) of perfectness at the given level."""
    t = data.ctype
    if special is None:
        special = default_special_node(t)
    cd = cartan_data(t)
    c = cd.central_coeffs
    idx = list(t.index_set)
    report = PerfectReport()

    # (ii) B (x) B connected
    bb = TensorProduct([data, data])
    start = (data.elements[0], data.elements[0])
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for i in idx:
            for y in (bb.e(x, i), bb.f(x, i)):
                if y is not None and y not in seen:
                    seen.add(y)
                    queue.append(y)
    if len(seen) != len(data.elements) ** 2:
        report.fail("ii", f"B(x)B has a component of size {len(seen)}")

    # (iii) a weight lambda_0 bounding wt(B) from above, attained once
    alphas = [tuple(cd.matrix[j][i] for j in idx) for i in idx if i != special]
    tops = [b for b in data.elements if all(data.e(b, i) is None for i in idx if i != special)]
    found = False
    for top in tops:
        lam0 = data.weight(top)
        diffs = [tuple(x - y for x, y in zip(lam0, data.weight(b))) for b in data.elements]
        if all(_solve_nonneg(alphas, d) for d in diffs):
            hits = sum(1 for b in data.elements if data.weight(b) == lam0)
            if hits == 1:
                found = True
                break
    if not found:
        report.fail("iii", "no dominating weight with one-dimensional weight space")

    # (iv) <c, eps(b)> >= level
    for b in data.elements:
        lev = sum(ci * e for ci, e in zip(c, data.eps_vector(b)))
        if lev < level:
            report.fail("iv", f"{b} has <c,eps> = {lev}")

    # (v) eps, phi : B^min -> level-l dominant weights are bijections
    bmin = [b for b in data.elements if sum(ci * e for ci, e in zip(c, data.eps_vector(b))) == level]
    targets = {fundamental(t, i) for i in cd.level1_weights} if level == 1 else None
    for name, vec in (("eps", data.eps_vector), ("phi", data.phi_vector)):
        images = [vec(b) for b in bmin]
        if len(set(images)) != len(images):
            report.fail("v", f"{name} is not injective on B^min")
        if targets is not None and set(images) != targets:
            report.fail("v", f"{name}(B^min) misses level-1 weights")
    for lam, (up, low) in data.minimal.items():
        if data.eps_vector(up) != fundamental(t, lam):
            report.fail("v", f"eps(b^L{lam}) != L{lam}")
        if data.phi_vector(low) != fundamental(t, lam):
            report.fail("v", f"phi(b_L{lam}) != L{lam}")
    return report
