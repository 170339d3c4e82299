"""Signature rule, tensor products, rooted graph generation and comparison."""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Protocol, Sequence

from .cartan import AffineType, cartan_data

DEFAULT_NODE_BUDGET = 10**6


def node_budget() -> int:
    return int(os.environ.get("WALLCRYS_NODE_BUDGET", DEFAULT_NODE_BUDGET))


class Crystal(Protocol):
    """Minimal seminormal crystal contract.

    ``weight`` returns the classical weight in fundamental-weight
    coordinates, i.e. the tuple of pairings with h_0, ..., h_n.
    """

    ctype: AffineType

    def e(self, b: Any, i: int) -> Any | None: ...

    def f(self, b: Any, i: int) -> Any | None: ...

    def eps(self, b: Any, i: int) -> int: ...

    def phi(self, b: Any, i: int) -> int: ...

    def weight(self, b: Any) -> tuple[int, ...]: ...

    def key(self, b: Any) -> str: ...


@dataclass(frozen=True)
class SignatureTape:
    runs: tuple[tuple[int, int], ...]
    minus: int
    plus: int
    e_pos: int | None  # factor carrying the right-most surviving -
    f_pos: int | None  # factor carrying the left-most surviving +


def reduce_signature(runs: Sequence[tuple[int, int]]) -> SignatureTape:
    """Cancel (+,-) pairs in the word -^eps +^phi of each factor, left to right."""
    pending: list[list[int]] = []  # [factor, surviving plus count]
    minus = 0
    e_pos = None
    for idx, (m, p) in enumerate(runs):
        while m and pending:
            top = pending[-1]
            take = min(m, top[1])
            top[1] -= take
            m -= take
            if top[1] == 0:
                pending.pop()
        if m:
            minus += m
            e_pos = idx
        if p:
            pending.append([idx, p])
    plus = sum(c for _, c in pending)
    f_pos = pending[0][0] if pending else None
    return SignatureTape(tuple(map(tuple, runs)), minus, plus, e_pos, f_pos)


def tensor_apply(
    op: str, i: int, word: Sequence[Any], crystals: Sequence[Crystal]
) -> tuple[Any, ...] | None:
    """Apply e_i or f_i to the tensor word b_1 (x) ... (x) b_N.

    ``crystals[j]`` is the crystal of factor j.
    """
    runs = [(c.eps(b, i), c.phi(b, i)) for c, b in zip(crystals, word)]
    tape = reduce_signature(runs)
    pos = tape.e_pos if op == "e" else tape.f_pos
    if pos is None:
        return None
    c = crystals[pos]
    new = c.e(word[pos], i) if op == "e" else c.f(word[pos], i)
    assert new is not None, "signature pointed at a factor that cannot act"
    out = list(word)
    out[pos] = new
    return tuple(out)


class TensorProduct:
    """B_1 (x) ... (x) B_N with elements stored as tuples."""

    def __init__(self, factors: Sequence[Crystal]):
        self.factors = tuple(factors)
        self.ctype = factors[0].ctype

    def _tape(self, b: tuple, i: int) -> SignatureTape:
        return reduce_signature(
            [(c.eps(x, i), c.phi(x, i)) for c, x in zip(self.factors, b)]
        )

    def eps(self, b: tuple, i: int) -> int:
        return self._tape(b, i).minus

    def phi(self, b: tuple, i: int) -> int:
        return self._tape(b, i).plus

    def e(self, b: tuple, i: int) -> tuple | None:
        return tensor_apply("e", i, b, self.factors)

    def f(self, b: tuple, i: int) -> tuple | None:
        return tensor_apply("f", i, b, self.factors)

    def weight(self, b: tuple) -> tuple[int, ...]:
        ws = [c.weight(x) for c, x in zip(self.factors, b)]
        return tuple(map(sum, zip(*ws)))

    def key(self, b: tuple) -> str:
        return "(" + " (x) ".join(c.key(x) for c, x in zip(self.factors, b)) + ")"


def is_maximal(crystal: Crystal, b: Any) -> bool:
    return all(crystal.e(b, i) is None for i in crystal.ctype.index_set)


@dataclass
class Node:
    key: str
    element: Any
    weight: tuple[int, ...]
    eps: tuple[int, ...]
    phi: tuple[int, ...]
    depth: int
    parent: tuple[str, int] | None = None


@dataclass
class CrystalGraph:
    root: str
    nodes: dict[str, Node] = field(default_factory=dict)
    edges: list[tuple[str, int, str]] = field(default_factory=list)
    max_depth: int | None = None
    truncated: bool = False

    def word(self, key: str) -> list[int]:
        """Shortest f-word from the root (BFS tree)."""
        out = []
        node = self.nodes[key]
        while node.parent is not None:
            src, i = node.parent
            out.append(i)
            node = self.nodes[src]
        return out[::-1]

    def out_edges(self) -> dict[str, dict[int, str]]:
        table: dict[str, dict[int, str]] = {k: {} for k in self.nodes}
        for s, i, d in self.edges:
            table[s][i] = d
        return table

    def depth_counts(self) -> list[int]:
        counts: dict[int, int] = {}
        for node in self.nodes.values():
            counts[node.depth] = counts.get(node.depth, 0) + 1
        return [counts[d] for d in sorted(counts)]


def _make_node(crystal: Crystal, b: Any, depth: int, parent=None) -> Node:
    idx = crystal.ctype.index_set
    return Node(
        key=crystal.key(b),
        element=b,
        weight=tuple(crystal.weight(b)),
        eps=tuple(crystal.eps(b, i) for i in idx),
        phi=tuple(crystal.phi(b, i) for i in idx),
        depth=depth,
        parent=parent,
    )


def generate_graph(
    crystal: Crystal,
    root: Any,
    max_depth: int | None = None,
    max_nodes: int | None = None,
) -> CrystalGraph:
    """Breadth-first closure of ``root`` under all f_i, labels ascending.

    Nodes are deduplicated by ``crystal.key``. Edges leaving the last kept
    depth are dropped. If the node budget runs out the graph is returned
    with ``truncated`` set.
    """
    budget = max_nodes if max_nodes is not None else node_budget()
    first = _make_node(crystal, root, 0)
    graph = CrystalGraph(root=first.key, max_depth=max_depth)
    graph.nodes[first.key] = first
    queue = deque([first])
    labels = list(crystal.ctype.index_set)
    while queue:
        node = queue.popleft()
        if max_depth is not None and node.depth >= max_depth:
            continue
        for i in labels:
            if node.phi[i] == 0:
                continue
            b = crystal.f(node.element, i)
            k = crystal.key(b)
            if k not in graph.nodes:
                if len(graph.nodes) >= budget:
                    graph.truncated = True
                    return graph
                child = _make_node(crystal, b, node.depth + 1, (node.key, i))
                graph.nodes[k] = child
                queue.append(child)
            graph.edges.append((node.key, i, k))
    return graph


class IncomparableGraphs(ValueError):
    pass


@dataclass(frozen=True)
class BisimResult:
    ok: bool
    word: tuple[int, ...] | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def graphs_bisimilar(g1: CrystalGraph, g2: CrystalGraph) -> BisimResult:
    """Decide isomorphism of two deterministic rooted edge-labelled graphs.

    Walks both graphs in lockstep from the roots; the first divergence in
    labels, weight, eps or phi is reported with the shortest f-word.
    """
    if g1.max_depth != g2.max_depth:
        raise IncomparableGraphs(f"depths {g1.max_depth} and {g2.max_depth} differ")
    out1, out2 = g1.out_edges(), g2.out_edges()
    match = {g1.root: g2.root}
    used = {g2.root}
    queue = deque([(g1.root, ())])
    while queue:
        a, w = queue.popleft()
        b = match[a]
        n1, n2 = g1.nodes[a], g2.nodes[b]
        for attr in ("weight", "eps", "phi", "depth"):
            if getattr(n1, attr) != getattr(n2, attr):
                return BisimResult(False, w, f"{attr} differs at {a} / {b}")
        if set(out1[a]) != set(out2[b]):
            return BisimResult(False, w, f"labels differ at {a} / {b}")
        for i in sorted(out1[a]):
            x, y = out1[a][i], out2[b][i]
            if x in match:
                if match[x] != y:
                    return BisimResult(False, w + (i,), "targets disagree")
                continue
            if y in used:
                return BisimResult(False, w + (i,), "map is not injective")
            match[x] = y
            used.add(y)
            queue.append((x, w + (i,)))
    if len(match) != len(g1.nodes) or len(used) != len(g2.nodes):
        return BisimResult(False, None, "node counts differ")
    return BisimResult(True)


def check_axioms(crystal: Crystal, graph: CrystalGraph) -> list[str]:
    """Crystal axioms on every node of ``graph``; returns violations."""
    t = crystal.ctype
    a = cartan_data(t).matrix
    bad: list[str] = []
    for node in graph.nodes.values():
        b = node.element
        for i in t.index_set:
            if node.phi[i] - node.eps[i] != node.weight[i]:
                bad.append(f"{node.key}: phi-eps != <h_{i},wt> ")
            for op, inv, de, dp, sign in (("f", "e", 1, -1, -1), ("e", "f", -1, 1, 1)):
                c = getattr(crystal, op)(b, i)
                if c is None:
                    if (node.phi if op == "f" else node.eps)[i] != 0:
                        bad.append(f"{node.key}: {op}_{i} undefined but string nonzero")
                    continue
                back = getattr(crystal, inv)(c, i)
                if back is None or crystal.key(back) != node.key:
                    bad.append(f"{node.key}: {inv}_{i}{op}_{i} is not identity")
                if crystal.eps(c, i) != node.eps[i] + de:
                    bad.append(f"{node.key}: eps_{i} after {op}_{i}")
                if crystal.phi(c, i) != node.phi[i] + dp:
                    bad.append(f"{node.key}: phi_{i} after {op}_{i}")
                expect = tuple(w + sign * a[j][i] for j, w in enumerate(node.weight))
                if tuple(crystal.weight(c)) != expect:
                    bad.append(f"{node.key}: wt after {op}_{i}")
            # string lengths recomputed by iteration
            for op, stored in (("e", node.eps[i]), ("f", node.phi[i])):
                steps, c = 0, b
                while (c := getattr(crystal, op)(c, i)) is not None:
                    steps += 1
                if steps != stored:
                    bad.append(f"{node.key}: {op}_{i}-string length {steps} != {stored}")
    return bad


def to_json(graph: CrystalGraph, extra: dict | None = None) -> str:
    doc: dict[str, Any] = {
        "root": graph.root,
        "nodes": [
            {"key": n.key, "wt": list(n.weight), "eps": list(n.eps),
             "phi": list(n.phi), "depth": n.depth}
            for n in graph.nodes.values()
        ],
        "edges": [{"src": s, "i": i, "dst": d} for s, i, d in graph.edges],
    }
    if graph.truncated:
        doc["truncated"] = True
    if extra:
        doc.update(extra)
    return json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=1) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: CrystalGraph, name: str = "crystal") -> str:
    ids = {k: f"n{j}" for j, k in enumerate(graph.nodes)}
    lines = [f"digraph {name} {{"]
    for k, nid in ids.items():
        lines.append(f"  {nid} [label={_dot_quote(k)}];")
    for s, i, d in graph.edges:
        lines.append(f"  {ids[s]} -> {ids[d]} [label={i}];")
    lines.append("}")
    return "\n".join(lines) + "\n"

