"""Ground-state paths and the crystal of lambda-paths.

A path is stored as the tuple ``(p(0), p(1), ..., p(N-1))`` of entries that
deviate from the ground-state path; every entry at index >= N is the
ground entry b_k.  The semi-infinite ground tail beyond the window behaves
as a highest weight vector of weight lambda_N, so it enters the signature
as a single factor with eps = 0 and phi = <h_i, lambda_N>.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import AffineType, cartan_data
from .crystal_core import reduce_signature
from .perfect import EMPTY, PerfectCrystal, fundamental, perfect_crystal


class DomainError(ValueError):
    pass


@dataclass(frozen=True)
class GroundState:
    weights: tuple[int, ...]  # lambda_0, ..., lambda_{P-1} as fundamental indices
    elements: tuple[str, ...]  # b_0, ..., b_{P-1}

    @property
    def period(self) -> int:
        return len(self.elements)

    def elem(self, k: int) -> str:
        return self.elements[k % self.period]

    def weight(self, k: int) -> int:
        return self.weights[k % self.period]


@lru_cache(maxsize=None)
def ground_state(t: AffineType, lam: int) -> GroundState:
    B = perfect_crystal(t)
    if lam not in cartan_data(t).level1_weights:
        raise DomainError(f"Lambda_{lam} is not a level-1 weight of {t}")
    weights, elements = [], []
    cur = lam
    while cur not in weights:
        weights.append(cur)
        b = B.b_lower(cur)
        elements.append(b)
        nxt = B.eps_vector(b)
        cur = nxt.index(1)
    if cur != lam:
        raise DomainError("ground-state sequence is not purely periodic")
    return GroundState(tuple(weights), tuple(elements))


Path = tuple[str, ...]


def render_symbol(b: str) -> str:
    return b


class PathCrystal:
    """The classical crystal P(lambda) of lambda-paths."""

    def __init__(self, t: AffineType, lam: int):
        self.ctype = t
        self.lam = lam
        self.B: PerfectCrystal = perfect_crystal(t)
        self.ground = ground_state(t, lam)
        self.root: Path = ()

    def normalize(self, p: Path) -> Path:
        n = len(p)
        while n and p[n - 1] == self.ground.elem(n - 1):
            n -= 1
        return tuple(p[:n])

    def entry(self, p: Path, k: int) -> str:
        return p[k] if k < len(p) else self.ground.elem(k)

    def _window(self, p: Path, window: int | None) -> int:
        return len(p) if window is None else max(window, len(p))

    def _tape(self, p: Path, i: int, window: int | None = None):
        n = self._window(p, window)
        head = (0, self.B.phi(self.ground.elem(n), i))
        runs = [head] + [
            (self.B.eps(b, i), self.B.phi(b, i))
            for b in (self.entry(p, k) for k in range(n - 1, -1, -1))
        ]
        return n, reduce_signature(runs)

    def eps(self, p: Path, i: int, window: int | None = None) -> int:
        return self._tape(p, i, window)[1].minus

    def phi(self, p: Path, i: int, window: int | None = None) -> int:
        return self._tape(p, i, window)[1].plus

    def _act(self, p: Path, i: int, op: str, window: int | None) -> Path | None:
        n, tape = self._tape(p, i, window)
        pos = tape.e_pos if op == "e" else tape.f_pos
        if pos is None:
            return None
        entries = [self.entry(p, k) for k in range(n)]
        if pos == 0:
            # only f can land on the head: the tail grows by one entry
            entries.append(self.B.f(self.ground.elem(n), i))
        else:
            k = n - pos
            act = self.B.e if op == "e" else self.B.f
            entries[k] = act(entries[k], i)
        return self.normalize(tuple(entries))

    def e(self, p: Path, i: int, window: int | None = None) -> Path | None:
        return self._act(p, i, "e", window)

    def f(self, p: Path, i: int, window: int | None = None) -> Path | None:
        return self._act(p, i, "f", window)

    def weight(self, p: Path, window: int | None = None) -> tuple[int, ...]:
        n = self._window(p, window)
        total = list(fundamental(self.ctype, self.ground.weight(n)))
        for k in range(n):
            for j, w in enumerate(self.B.weight(self.entry(p, k))):
                total[j] += w
        return tuple(total)

    def display(self, p: Path, width: int = 6) -> tuple[str, ...]:
        """The last ``width`` entries, written left to right as p(width-1) ... p(0)."""
        return tuple(self.entry(p, k) for k in range(width - 1, -1, -1))

    def render(self, p: Path, width: int | None = None) -> str:
        w = max(len(p) + self.ground.period, 2) if width is None else width
        return "(… " + " ".join(render_symbol(b) for b in self.display(p, w)) + ")"

    def key(self, p: Path) -> str:
        if not p:
            return "()"
        return "(" + " ".join(p[::-1]) + ")"


def parse_path_key(text: str) -> Path:
    body = text.strip()[1:-1].split()
    return tuple(reversed(body))


__all__ = [
    "DomainError",
    "EMPTY",
    "GroundState",
    "PathCrystal",
    "ground_state",
    "parse_path_key",
]
