"""Affine Cartan data and integral weight arithmetic.

Weights are kept as a fundamental weight plus an alpha-content tuple, so
that every family (including the one where delta has a coefficient 2 on
alpha_0) stays in integer arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

# family code -> (letter, twist, minimal rank)
FAMILIES: dict[str, tuple[str, int, int]] = {
    "An1": ("A", 1, 1),
    "A2n-1_2": ("A", 2, 3),
    "Dn1": ("D", 1, 4),
    "A2n2": ("A", 2, 2),
    "Dn+1_2": ("D", 2, 2),
    "Bn1": ("B", 1, 3),
}


class InvalidType(ValueError):
    """Raised for an unknown family or an out-of-range rank."""


@dataclass(frozen=True, order=True)
class AffineType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise InvalidType(f"unknown family {self.family!r}")
        if self.rank < FAMILIES[self.family][2]:
            raise InvalidType(f"rank {self.rank} too small for {self.family}")

    @property
    def index_set(self) -> range:
        return range(self.rank + 1)

    @property
    def name(self) -> str:
        """Short name in the ``<letter><m>~<twist>`` grammar, e.g. ``A5~2``."""
        letter, twist, _ = FAMILIES[self.family]
        n = self.rank
        m = {"An1": n, "A2n-1_2": 2 * n - 1, "Dn1": n, "A2n2": 2 * n,
             "Dn+1_2": n + 1, "Bn1": n}[self.family]
        return f"{letter}{m}~{twist}"

    def __str__(self) -> str:
        return self.name


_TYPE_RE = re.compile(r"^([ABD])(\d+)~([12])$")


def parse_type(text: str) -> AffineType:
    """Parse ``A2~1``, ``A5~2``, ``D4~1``, ``A4~2``, ``D3~2``, ``B3~1``.

    The number is the subscript of the affine name; for twisted types the
    rank n is recovered from it (A_{2n-1}, A_{2n}, D_{n+1}).
    """
    m = _TYPE_RE.match(text.strip())
    if not m:
        raise InvalidType(f"cannot parse type {text!r}")
    letter, num, twist = m.group(1), int(m.group(2)), int(m.group(3))
    if (letter, twist) == ("A", 1):
        return AffineType("An1", num)
    if (letter, twist) == ("A", 2):
        if num % 2:
            return AffineType("A2n-1_2", (num + 1) // 2)
        return AffineType("A2n2", num // 2)
    if (letter, twist) == ("D", 1):
        return AffineType("Dn1", num)
    if (letter, twist) == ("D", 2):
        return AffineType("Dn+1_2", num - 1)
    if (letter, twist) == ("B", 1):
        return AffineType("Bn1", num)
    raise InvalidType(f"unsupported type {text!r}")


@dataclass(frozen=True)
class CartanData:
    matrix: tuple[tuple[int, ...], ...]
    delta_coeffs: tuple[int, ...]
    central_coeffs: tuple[int, ...]
    level1_weights: tuple[int, ...]


def _bonds(t: AffineType) -> list[tuple[int, int, int, int]]:
    """Edges (i, j, a_ij, a_ji) of the Dynkin diagram."""
    n = t.rank
    f = t.family
    if f == "An1":
        if n == 1:
            return [(0, 1, -2, -2)]
        return [(i, (i + 1) % (n + 1), -1, -1) for i in range(n + 1)]
    if f in ("A2n-1_2", "Bn1", "Dn1"):
        # nodes 0 and 1 both hang off node 2
        edges = [(0, 2, -1, -1), (1, 2, -1, -1)]
        if f == "Dn1":
            edges += [(i, i + 1, -1, -1) for i in range(2, n - 2)]
            edges += [(n - 2, n - 1, -1, -1), (n - 2, n, -1, -1)]
            return edges
        edges += [(i, i + 1, -1, -1) for i in range(2, n - 1)]
        if f == "A2n-1_2":
            edges.append((n - 1, n, -2, -1))
        else:
            edges.append((n - 1, n, -1, -2))
        return edges
    # chains with double bonds at both ends
    edges = [(i, i + 1, -1, -1) for i in range(1, n - 1)]
    if f == "A2n2":
        left, right = (0, 1, -2, -1), (n - 1, n, -2, -1)
    else:
        left, right = (0, 1, -2, -1), (n - 1, n, -1, -2)
    return [left, *edges, right]


@lru_cache(maxsize=None)
def cartan_data(t: AffineType) -> CartanData:
    """Cartan matrix, null-root and central coefficients, level-1 weights."""
    n = t.rank
    a = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        a[i][i] = 2
    for i, j, aij, aji in _bonds(t):
        a[i][j], a[j][i] = aij, aji
    f = t.family
    twos = [2] * (n - 3)
    if f == "An1":
        d = c = [1] * (n + 1)
        lv1 = list(range(n + 1))
    elif f == "A2n-1_2":
        d = [1, 1, *([2] * (n - 2)), 1]
        c = [1, 1, *([2] * (n - 2)), 2]
        lv1 = [0, 1]
    elif f == "Dn1":
        d = c = [1, 1, *twos, 1, 1]
        lv1 = [0, 1, n - 1, n]
    elif f == "A2n2":
        d = [*([2] * n), 1]
        c = [1, *([2] * n)]
        lv1 = [0]
    elif f == "Dn+1_2":
        d = [1] * (n + 1)
        c = [1, *([2] * (n - 1)), 1]
        lv1 = [0, n]
    else:  # Bn1
        d = [1, 1, *([2] * (n - 1))]
        c = [1, 1, *([2] * (n - 2)), 1]
        lv1 = [0, 1, n]
    return CartanData(
        matrix=tuple(tuple(row) for row in a),
        delta_coeffs=tuple(d),
        central_coeffs=tuple(c),
        level1_weights=tuple(lv1),
    )


@dataclass(frozen=True, order=True)
class AffineWeight:
    """The weight ``Lambda_base - sum_i content[i] * alpha_i``.

    ``base`` may be ``None`` for the zero base (pure root-lattice element).
    """

    base: int | None
    content: tuple[int, ...]

    @classmethod
    def fundamental(cls, t: AffineType, b: int) -> AffineWeight:
        return cls(b, (0,) * (t.rank + 1))


def pair(w: AffineWeight, i: int, t: AffineType) -> int:
    """<h_i, w>."""
    a = cartan_data(t).matrix
    head = 1 if w.base == i else 0
    return head - sum(a[i][j] * k for j, k in enumerate(w.content))


def classical(w: AffineWeight, t: AffineType) -> tuple[int, ...]:
    """Coordinates of w in the fundamental-weight basis (delta forgotten)."""
    return tuple(pair(w, i, t) for i in t.index_set)


def level(w: AffineWeight, t: AffineType) -> int:
    c = cartan_data(t).central_coeffs
    return sum(ci * pair(w, i, t) for i, ci in enumerate(c))


def subtract_root(w: AffineWeight, i: int) -> AffineWeight:
    k = list(w.content)
    k[i] += 1
    return AffineWeight(w.base, tuple(k))


def delta_degree(w: AffineWeight, t: AffineType) -> tuple[int, ...]:
    """Total blocks per color; the only exposed form of the delta-grading."""
    return w.content
