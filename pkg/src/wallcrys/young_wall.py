"""Young walls: column patterns, properness, signatures and Kashiwara operators.

Geometry.  Every unit cell of a column is split into four quarters
(lower/upper x back/front).  A unit cube fills all four, a half-thickness
block fills the back or the front pair, a half-height block the lower or
upper pair.  Each column is filled along a periodic add-sequence, one row
at a time.

Encoding.  A column is an integer ``s = 2*c + alt``.  ``c`` counts added
blocks.  With ``alt = 0`` the blocks are the first ``c`` entries of the
add-sequence.  With ``alt = 1`` the entry at position ``c-1`` is the back
half of a split cell and it is replaced by the front half at position
``c``: the two halves of a split cell may arrive in either order.
A wall is the tuple of column states, column 0 first, with trailing
ground columns trimmed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .cartan import AffineType, AffineWeight, cartan_data
from .crystal_core import reduce_signature

LB, LF, UB, UF = 1, 2, 4, 8
FULL = LB | LF | UB | UF
MASKS = {"F": FULL, "b": LB | UB, "f": LF | UF, "l": LB | LF, "u": UB | UF}

Wall = tuple[int, ...]


def state(c: int, alt: bool = False) -> int:
    return 2 * c + int(alt)


def unpack(s: int) -> tuple[int, bool]:
    return s >> 1, bool(s & 1)


@dataclass(frozen=True)
class BlockSpec:
    color: int
    height: float  # 1 or 0.5
    thickness: float  # 1 or 0.5


def block_specs(t: AffineType) -> dict[int, BlockSpec]:
    """Shape of the block of each color."""
    n, f = t.rank, t.family
    halves_thin = {"A2n-1_2": {0, 1}, "Dn1": {0, 1, n - 1, n}, "Bn1": {0, 1}}.get(f, set())
    halves_low = {"A2n2": {0}, "Dn+1_2": {0, n}, "Bn1": {n}}.get(f, set())
    return {
        i: BlockSpec(i, 0.5 if i in halves_low else 1.0, 0.5 if i in halves_thin else 1.0)
        for i in t.index_set
    }


@dataclass(frozen=True)
class Slot:
    color: int
    kind: str  # one of F, b, f, l, u
    row: int  # row inside the first period

    @property
    def mask(self) -> int:
        return MASKS[self.kind]


@dataclass(frozen=True)
class ColumnPattern:
    ground: tuple[int, str] | None
    slots: tuple[Slot, ...]
    rows_per_period: int

    @property
    def period(self) -> int:
        return len(self.slots)

    @property
    def ground_mask(self) -> int:
        return MASKS[self.ground[1]] if self.ground else 0

    def slot(self, p: int) -> Slot:
        q, r = divmod(p, self.period)
        s = self.slots[r]
        return Slot(s.color, s.kind, s.row + q * self.rows_per_period)

    def color(self, p: int) -> int:
        return self.slots[p % self.period].color

    def kind(self, p: int) -> str:
        return self.slots[p % self.period].kind

    def positions(self, s: int) -> list[int]:
        c, alt = unpack(s)
        return [*range(c - 1), c] if alt else list(range(c))

    def valid_state(self, s: int) -> bool:
        c, alt = unpack(s)
        return c >= 0 and (not alt or (c >= 1 and self.kind(c - 1) == "b"))

    def occupancy(self, s: int) -> tuple[int, int]:
        """(number of complete rows, quarter mask of the partial top row)."""
        c, alt = unpack(s)
        if c == 0:
            g = self.ground_mask
            return (1, 0) if g == FULL else (0, g)
        top = c if alt else c - 1
        r = self.slot(top).row
        m = self.slot(top).mask
        prev = top - 2 if alt else top - 1
        if prev >= 0 and self.slot(prev).row == r:
            m |= self.slot(prev).mask
        if r == 0:
            m |= self.ground_mask
        return (r + 1, 0) if m == FULL else (r, m)

    def removals(self, s: int) -> list[tuple[int, int]]:
        """(color, new state) for every block that sits on top of the column."""
        c, alt = unpack(s)
        if c == 0:
            return []
        if alt:
            return [(self.color(c), state(c - 1))]
        out = [(self.color(c - 1), state(c - 1))]
        if self.kind(c - 1) == "f" and c >= 2 and self.kind(c - 2) == "b":
            out.append((self.color(c - 2), state(c - 1, True)))
        return out

    def additions(self, s: int) -> list[tuple[int, int]]:
        """(color, new state) for every block that can go on top next."""
        c, alt = unpack(s)
        if alt:
            return [(self.color(c - 1), state(c + 1))]
        out = [(self.color(c), state(c + 1))]
        if self.kind(c) == "b":
            out.append((self.color(c + 1), state(c + 1, True)))
        return out

    def content(self, s: int, size: int) -> tuple[int, ...]:
        """Blocks of each color added in this column."""
        k = [0] * size
        for p in self.positions(s):
            k[self.color(p)] += 1
        return tuple(k)


def _swap(seq, pairs):
    table = {}
    for a, b in pairs:
        table[a], table[b] = b, a
    return [(table.get(c, c), kind) for c, kind in seq]


def _sequences(t: AffineType, lam: int) -> list[tuple[tuple[int, str] | None, list[tuple[int, str]]]]:
    """(ground block, one period of the add-sequence) for each column class."""
    n, f = t.rank, t.family
    up = lambda a, b: [(j, "F") for j in range(a, b + 1)]  # noqa: E731
    down = lambda a, b: [(j, "F") for j in range(a, b - 1, -1)]  # noqa: E731

    def classes(ground, seq, pairs):
        other = _swap([ground], pairs)[0]
        return [(ground, seq), (other, _swap(seq, pairs))]

    if f == "An1":
        return [(None, [((lam - k + q) % (n + 1), "F") for q in range(n + 1)]) for k in range(n + 1)]
    if f == "A2n-1_2":
        seq = [(0, "f"), *up(2, n), *down(n - 1, 2), (1, "b")]
        out = classes((1, "b"), seq, [(0, 1)])
        return out if lam == 0 else out[::-1]
    if f == "Dn1":
        if lam in (0, 1):
            seq = [(0, "f"), *up(2, n - 2), (n, "b"), (n - 1, "f"), *down(n - 2, 2), (1, "b")]
            out = classes((1, "b"), seq, [(0, 1), (n - 1, n)])
            swap = [(0, 1)] if lam == 1 else []
        else:
            seq = [(n - 1, "f"), *down(n - 2, 2), (1, "b"), (0, "f"), *up(2, n - 2), (n, "b")]
            out = classes((n, "b"), seq, [(0, 1), (n - 1, n)])
            swap = [(n - 1, n)] if lam == n else []
        return [(_swap([g], swap)[0], _swap(s, swap)) for g, s in out]
    if f == "A2n2":
        return [((0, "l"), [(0, "u"), *up(1, n), *down(n - 1, 1), (0, "l")])]
    if f == "Dn+1_2":
        if lam == 0:
            return [((0, "l"), [(0, "u"), *up(1, n - 1), (n, "l"), (n, "u"), *down(n - 1, 1), (0, "l")])]
        return [((n, "l"), [(n, "u"), *down(n - 1, 1), (0, "l"), (0, "u"), *up(1, n - 1), (n, "l")])]
    # Bn1
    if lam in (0, 1):
        seq = [(0, "f"), *up(2, n - 1), (n, "l"), (n, "u"), *down(n - 1, 2), (1, "b")]
        out = classes((1, "b"), seq, [(0, 1)])
        return out if lam == 0 else out[::-1]
    seq = [(n, "u"), *down(n - 1, 2), (1, "b"), (0, "f"), *up(2, n - 1), (n, "l")]
    return classes((n, "l"), seq, [(0, 1)])


def _place(ground_mask: int, seq: list[tuple[int, str]], repeats: int) -> list[int]:
    rows = []
    row, mask = 0, ground_mask
    for _ in range(repeats):
        for _, kind in seq:
            if mask == FULL:
                row, mask = row + 1, 0
            rows.append(row)
            mask |= MASKS[kind]
    return rows


def _build(ground, seq) -> ColumnPattern:
    gm = MASKS[ground[1]] if ground else 0
    rows = _place(gm, seq, 2)
    slots = tuple(Slot(c, k, r) for (c, k), r in zip(seq, rows))
    return ColumnPattern(ground, slots, rows[len(seq)] - rows[0])


class UnsupportedWeight(ValueError):
    pass


@dataclass(frozen=True)
class WallPattern:
    ctype: AffineType
    lam: int
    classes: tuple[ColumnPattern, ...]

    def column(self, k: int) -> ColumnPattern:
        return self.classes[k % len(self.classes)]

    @property
    def period(self) -> int:
        return self.classes[0].period


@lru_cache(maxsize=None)
def wall_pattern(t: AffineType, lam: int) -> WallPattern:
    if lam not in cartan_data(t).level1_weights:
        raise UnsupportedWeight(f"Lambda_{lam} is not a level-1 weight of {t}")
    return WallPattern(t, lam, tuple(_build(g, s) for g, s in _sequences(t, lam)))


def column_pattern(t: AffineType, lam: int, k: int) -> ColumnPattern:
    return wall_pattern(t, lam).column(k)


def blocks_per_delta(t: AffineType, lam: int) -> int:
    return wall_pattern(t, lam).period


def trim(w) -> Wall:
    w = list(w)
    while w and w[-1] == 0:
        w.pop()
    return tuple(w)


class YoungWallCrystal:
    """Proper Young walls on the ground-state wall of weight Lambda_lam.

    The operators are those of the full set of proper walls; the reduced
    walls reachable from the ground wall form a subcrystal.
    """

    def __init__(self, t: AffineType, lam: int):
        self.ctype = t
        self.lam = lam
        self.pattern = wall_pattern(t, lam)
        self.root: Wall = ()
        self.always_proper = t.family == "An1"
        self._a = cartan_data(t).matrix
        self._sig: dict[tuple[Wall, int], tuple] = {}

    # geometry ---------------------------------------------------------
    def col(self, w: Wall, k: int) -> int:
        return w[k] if k < len(w) else 0

    def occ(self, w: Wall, k: int) -> tuple[int, int]:
        return self.pattern.column(k).occupancy(self.col(w, k))

    @staticmethod
    def _covers(right: tuple[int, int], left: tuple[int, int]) -> bool:
        """Does the right column leave no free space next to the left one?"""
        (fr, mr), (fl, ml) = right, left
        return fl < fr or (fl == fr and ml & ~mr == 0)

    def full_height(self, w: Wall, k: int) -> int | None:
        rows, top = self.occ(w, k)
        return rows if top == 0 and rows > 0 else None

    def validate(self, w: Wall) -> bool:
        if any(not self.pattern.column(k).valid_state(s) for k, s in enumerate(w)):
            return False
        return all(self._covers(self.occ(w, k), self.occ(w, k + 1)) for k in range(len(w)))

    def is_proper(self, w: Wall) -> bool:
        if self.always_proper:
            return True
        heights = [h for k in range(len(w)) if (h := self.full_height(w, k)) is not None]
        return len(heights) == len(set(heights))

    def _replace(self, w: Wall, k: int, s: int) -> Wall:
        cols = list(w) + [0] * (k + 1 - len(w))
        cols[k] = s
        return trim(cols)

    def _ok_after(self, w: Wall, k: int, s: int) -> Wall | None:
        """The wall with column k set to s, if it is still valid and proper."""
        pat = self.pattern.column(k)
        new = pat.occupancy(s)
        if k > 0 and not self._covers(self.occ(w, k - 1), new):
            return None
        if not self._covers(new, self.occ(w, k + 1)):
            return None
        out = self._replace(w, k, s)
        if not self.always_proper:
            h = new[0] if new[1] == 0 and new[0] > 0 else None
            if h is not None:
                for j in range(len(out)):
                    if j != k and self.full_height(out, j) == h:
                        return None
        return out

    # signatures -------------------------------------------------------
    def _moves(self, w: Wall, k: int, i: int, removing: bool) -> list[Wall]:
        """Successive proper walls obtained by removing (adding) i-blocks on column k."""
        out = []
        cur = w
        for _ in range(2):
            pat = self.pattern.column(k)
            opts = pat.removals(self.col(cur, k)) if removing else pat.additions(self.col(cur, k))
            nxt = None
            for color, s in opts:
                if color == i and (nxt := self._ok_after(cur, k, s)) is not None:
                    break
            if nxt is None:
                break
            out.append(nxt)
            cur = nxt
        return out

    def column_signature(self, w: Wall, k: int, i: int) -> str:
        return "-" * len(self._moves(w, k, i, True)) + "+" * len(self._moves(w, k, i, False))

    def signature(self, w: Wall, i: int):
        """(runs, tape, per-column first moves) with the leftmost column first."""
        key = (w, i)
        hit = self._sig.get(key)
        if hit is not None:
            return hit
        span = len(w)
        runs, rem, add = [], [], []
        for k in range(span, -1, -1):
            r = self._moves(w, k, i, True)
            a = self._moves(w, k, i, False)
            runs.append((len(r), len(a)))
            rem.append(r[0] if r else None)
            add.append(a[0] if a else None)
        tape = reduce_signature(runs)
        hit = (runs, tape, rem, add)
        self._sig[key] = hit
        return hit

    def eps(self, w: Wall, i: int) -> int:
        return self.signature(w, i)[1].minus

    def phi(self, w: Wall, i: int) -> int:
        return self.signature(w, i)[1].plus

    def e(self, w: Wall, i: int) -> Wall | None:
        _, tape, rem, _ = self.signature(w, i)
        return None if tape.e_pos is None else rem[tape.e_pos]

    def f(self, w: Wall, i: int) -> Wall | None:
        _, tape, _, add = self.signature(w, i)
        return None if tape.f_pos is None else add[tape.f_pos]

    # weights ----------------------------------------------------------
    def content(self, w: Wall) -> tuple[int, ...]:
        size = self.ctype.rank + 1
        total = [0] * size
        for k, s in enumerate(w):
            for j, v in enumerate(self.pattern.column(k).content(s, size)):
                total[j] += v
        return tuple(total)

    def affine_weight(self, w: Wall) -> AffineWeight:
        return AffineWeight(self.lam, self.content(w))

    def weight(self, w: Wall) -> tuple[int, ...]:
        k = self.content(w)
        a = self._a
        return tuple(
            int(j == self.lam) - sum(a[j][i] * k[i] for i in range(len(k)))
            for j in self.ctype.index_set
        )

    def key(self, w: Wall) -> str:
        return format_wall(self.lam, w)

    # reducedness ------------------------------------------------------
    def has_removable_delta(self, w: Wall, k: int) -> bool:
        c, alt = unpack(self.col(w, k))
        p = self.pattern.period
        if c - p < (1 if alt else 0):
            return False
        return self._ok_after(w, k, state(c - p, alt)) is not None

    def is_reduced(self, w: Wall) -> bool:
        return not any(self.has_removable_delta(w, k) for k in range(len(w)))


def format_wall(lam: int, w: Wall) -> str:
    parts = []
    for s in w:
        c, alt = unpack(s)
        parts.append(f"{c}'" if alt else str(c))
    return f"λ=Λ{lam};counts=" + ",".join(parts)


_LIT = re.compile(r"^\s*(?:λ|lambda|L)\s*=\s*(?:Λ|L)?(\d+)\s*;\s*counts\s*=\s*([0-9',\s]*)$")


def parse_wall(text: str) -> tuple[int, Wall]:
    """Parse ``λ=Λ0;counts=3,2,2,1``; a trailing ``'`` marks the alt state."""
    m = _LIT.match(text)
    if not m:
        raise ValueError(f"cannot parse wall literal {text!r}")
    lam = int(m.group(1))
    body = [x.strip() for x in m.group(2).split(",") if x.strip()]
    cols = []
    for tok in body:
        alt = tok.endswith("'")
        cols.append(state(int(tok.rstrip("'")), alt))
    return lam, trim(cols)


# rendering -------------------------------------------------------------

def _row_pieces(pat: ColumnPattern, s: int) -> dict[int, dict[str, tuple[int, bool]]]:
    """row -> {kind: (color, is_ground)}"""
    rows: dict[int, dict[str, tuple[int, bool]]] = {}
    if pat.ground:
        rows.setdefault(0, {})[pat.ground[1]] = (pat.ground[0], True)
    for p in pat.positions(s):
        sl = pat.slot(p)
        rows.setdefault(sl.row, {})[sl.kind] = (sl.color, False)
    return rows


def _token(pieces: dict[str, tuple[int, bool]]) -> str:
    def show(kind):
        if kind not in pieces:
            return "."
        color, ground = pieces[kind]
        return f"#{color}" if ground else str(color)

    if "F" in pieces:
        return show("F")
    if "b" in pieces or "f" in pieces:
        return f"{show('b')}\\{show('f')}"
    return f"{show('l')}_{show('u')}"


def render_ascii(crystal: YoungWallCrystal, w: Wall) -> str:
    """Rows top to bottom, column 0 on the right.

    Tokens: ``c`` unit cube, ``b\\f`` split cell (back, front),
    ``l_u`` half-height pair (lower, upper); ``.`` marks an empty half and
    ``#`` a ground block.
    """
    width = max(len(w), 1)
    cols = [_row_pieces(crystal.pattern.column(k), crystal.col(w, k)) for k in range(width)]
    top = max((max(c) for c in cols if c), default=-1)
    cell = 7
    lines = [crystal.key(w)]
    for r in range(top, -1, -1):
        toks = [(_token(cols[k][r]) if r in cols[k] else "") for k in range(width - 1, -1, -1)]
        lines.append("|" + "|".join(t.center(cell) for t in toks) + "|")
    lines.append("+" + "+".join("=" * cell for _ in range(width)) + "+")
    return "\n".join(lines) + "\n"


def parse_ascii(crystal: YoungWallCrystal, text: str) -> Wall:
    """Inverse of :func:`render_ascii` (the header line is ignored)."""
    body = [ln for ln in text.splitlines()[1:] if ln.startswith("|")]
    if not body:
        return ()
    grid = [[tok.strip() for tok in ln.strip("|").split("|")] for ln in body]
    width = len(grid[0])
    cols = []
    for j in range(width):
        k = width - 1 - j
        pat = crystal.pattern.column(k)
        added, alt = 0, False
        for row in grid:
            tok = row[j]
            if not tok:
                continue
            sep = "\\" if "\\" in tok else "_" if "_" in tok else None
            halves = tok.split(sep) if sep else [tok]
            added += sum(1 for h in halves if h not in (".", "") and not h.startswith("#"))
            if sep == "\\" and halves[0] == "." and halves[1] != ".":
                alt = True
        s = state(added, alt)
        if alt and not pat.valid_state(s):
            raise ValueError("alt marker on a cell that is not split")
        cols.append(s)
    return trim(cols[::-1])


# enumeration -------------------------------------------------------------

class Truncated(RuntimeError):
    pass


def _states_up_to(pat: ColumnPattern, budget: int) -> list[int]:
    out = []
    for c in range(budget + 1):
        out.append(state(c))
        if pat.valid_state(state(c, True)):
            out.append(state(c, True))
    return out


def enumerate_reduced(t: AffineType, lam: int, max_blocks: int, budget: int | None = None):
    """All reduced proper walls with at most ``max_blocks`` added blocks.

    Depth-first over columns 0, 1, 2, ... with states in increasing order;
    branches are cut by the block budget, the covering rule and properness.
    """
    crystal = YoungWallCrystal(t, lam)
    yielded = 0

    def rec(prefix: list[int], left: int, heights: set[int]):
        nonlocal yielded
        w = tuple(prefix)
        if crystal.is_reduced(w):
            yielded += 1
            if budget is not None and yielded > budget:
                raise Truncated(f"more than {budget} walls")
            yield w
        k = len(prefix)
        pat = crystal.pattern.column(k)
        prev = crystal.occ(w, k - 1) if k else None
        for s in _states_up_to(pat, left):
            c = s >> 1
            if c == 0:
                continue
            occ = pat.occupancy(s)
            if prev is not None and not crystal._covers(prev, occ):
                continue
            h = occ[0] if occ[1] == 0 and occ[0] > 0 else None
            if h is not None and not crystal.always_proper:
                if h in heights:
                    continue
                yield from rec(prefix + [s], left - c, heights | {h})
            else:
                yield from rec(prefix + [s], left - c, heights)

    yield from rec([], max_blocks, set())


def character_table(t: AffineType, lam: int, max_blocks: int) -> dict[tuple[int, ...], int]:
    """Weight content -> multiplicity over reduced proper walls."""
    crystal = YoungWallCrystal(t, lam)
    table: dict[tuple[int, ...], int] = {}
    for w in enumerate_reduced(t, lam, max_blocks):
        k = crystal.content(w)
        table[k] = table.get(k, 0) + 1
    return dict(sorted(table.items()))


def totals_by_blocks(t: AffineType, lam: int, max_blocks: int) -> list[int]:
    out = [0] * (max_blocks + 1)
    for k, m in character_table(t, lam, max_blocks).items():
        out[sum(k)] += m
    return out


def wall_weight(crystal: YoungWallCrystal, w: Wall) -> AffineWeight:
    return crystal.affine_weight(w)


def column_colors(crystal: YoungWallCrystal, w: Wall, k: int) -> list[int]:
    pat = crystal.pattern.column(k)
    return [pat.color(p) for p in pat.positions(crystal.col(w, k))]


def prefix_counts(pat: ColumnPattern, size: int) -> list[tuple[int, ...]]:
    acc = list(accumulate(([int(j == sl.color) for j in range(size)] for sl in pat.slots),
                          lambda a, b: [x + y for x, y in zip(a, b)]))
    return [tuple(x) for x in acc]
