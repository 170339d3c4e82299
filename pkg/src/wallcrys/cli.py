"""Command line: graph export, isomorphism checks, wall words and characters.

Exit codes: 0 success, 1 counterexample or undefined operator, 2 bad input,
3 node budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from typing import Sequence

from .cartan import AffineType, InvalidType, cartan_data, parse_type
from .correspondence import mutate_tables, psi_tables, verify_isomorphism
from .crystal_core import generate_graph, node_budget, to_dot, to_json
from .path_model import PathCrystal
from .young_wall import (
    Truncated,
    YoungWallCrystal,
    character_table,
    enumerate_reduced,
    render_ascii,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_TRUNCATED = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_lambda(text: str, t: AffineType) -> int:
    m = re.fullmatch(r"(?:L|Λ|Lambda_?)?(\d+)", text.strip())
    if not m:
        raise UsageError(f"cannot parse weight {text!r}; expected L<k>")
    lam = int(m.group(1))
    if lam not in cartan_data(t).level1_weights:
        allowed = ", ".join(f"L{k}" for k in cartan_data(t).level1_weights)
        raise UsageError(f"L{lam} is not a level-1 weight of {t}; choose from {allowed}")
    return lam


def parse_word(text: str, t: AffineType) -> list[tuple[str, int]]:
    word = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        m = re.fullmatch(r"([ef])_?(\d+)", tok)
        if not m or int(m.group(2)) not in t.index_set:
            raise UsageError(f"bad operator {tok!r}; expected f<i> or e<i> with i in 0..{t.rank}")
        word.append((m.group(1), int(m.group(2))))
    return word


def _crystal(model: str, t: AffineType, lam: int):
    return YoungWallCrystal(t, lam) if model == "wall" else PathCrystal(t, lam)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_ascii(graph) -> str:
    lines = [f"{n.depth:3d}  {n.key}" for n in graph.nodes.values()]
    lines += [f"{s}  --{i}-->  {d}" for s, i, d in graph.edges]
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    t = parse_type(args.type)
    lam = parse_lambda(args.lam, t)
    crystal = _crystal(args.model, t, lam)
    g = generate_graph(crystal, crystal.root, args.depth, node_budget())
    if args.format == "json":
        text = to_json(g, {"type": t.name, "lambda": f"L{lam}", "model": args.model, "depth": args.depth})
    elif args.format == "dot":
        text = to_dot(g)
    else:
        text = _graph_ascii(g)
    _emit(text, args.out)
    return EXIT_TRUNCATED if g.truncated else EXIT_OK


def cmd_verify(args) -> int:
    t = parse_type(args.type)
    lams = [parse_lambda(args.lam, t)] if args.lam else list(cartan_data(t).level1_weights)
    docs, code = [], EXIT_OK
    for lam in lams:
        tables = psi_tables(t, lam)
        if args.mutate:
            r1, r2 = (int(x) for x in args.mutate.split(","))
            tables = mutate_tables(tables, 0, r1, r2)
        rep = verify_isomorphism(t, lam, args.depth, tables, node_budget())
        docs.append(rep.to_dict())
        if rep.status == "fail":
            code = EXIT_FAIL
        elif rep.status == "truncated" and code == EXIT_OK:
            code = EXIT_TRUNCATED
    body = docs[0] if len(docs) == 1 else docs
    _emit(json.dumps(body, sort_keys=True, ensure_ascii=False, indent=1) + "\n", args.out)
    return code


def _describe(crystal: YoungWallCrystal, w) -> str:
    t = crystal.ctype
    lines = [render_ascii(crystal, w).rstrip("\n")]
    lines.append("content " + " ".join(str(k) for k in crystal.content(w)))
    lines.append("eps     " + " ".join(str(crystal.eps(w, i)) for i in t.index_set))
    lines.append("phi     " + " ".join(str(crystal.phi(w, i)) for i in t.index_set))
    lines.append(f"reduced {str(crystal.is_reduced(w)).lower()}")
    return "\n".join(lines) + "\n"


def cmd_wall(args) -> int:
    t = parse_type(args.type)
    lam = parse_lambda(args.lam, t)
    crystal = YoungWallCrystal(t, lam)
    if args.word is not None:
        word = parse_word(args.word, t)
    else:
        rng = random.Random(args.seed)
        word = [("f", rng.choice(list(t.index_set))) for _ in range(args.random)]
    w = crystal.root
    for step, (op, i) in enumerate(word, 1):
        nxt = getattr(crystal, op)(w, i)
        if nxt is None:
            _emit(_describe(crystal, w), args.out)
            sys.stderr.write(f"step {step}: {op}{i} is undefined on {crystal.key(w)}\n")
            return EXIT_FAIL
        w = nxt
    _emit(_describe(crystal, w), args.out)
    return EXIT_OK


def cmd_character(args) -> int:
    t = parse_type(args.type)
    lam = parse_lambda(args.lam, t)
    try:
        walls = list(enumerate_reduced(t, lam, args.max_blocks, node_budget()))
    except Truncated as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_TRUNCATED
    crystal = YoungWallCrystal(t, lam)
    table: dict[tuple[int, ...], int] = {}
    for w in walls:
        k = crystal.content(w)
        table[k] = table.get(k, 0) + 1
    table = dict(sorted(table.items()))
    totals = [0] * (args.max_blocks + 1)
    for k, m in table.items():
        totals[sum(k)] += m
    if args.format == "json":
        doc = {
            "type": t.name,
            "lambda": f"L{lam}",
            "max_blocks": args.max_blocks,
            "multiplicities": [{"content": list(k), "mult": m} for k, m in table.items()],
            "totals": totals,
        }
        text = json.dumps(doc, sort_keys=True, ensure_ascii=False, indent=1) + "\n"
    else:
        rows = [f"{' '.join(map(str, k)):>{2 * (t.rank + 1)}}  {m}" for k, m in table.items()]
        text = "\n".join(rows + ["totals " + " ".join(map(str, totals))]) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wallcrys", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, lam_required=True):
        sp.add_argument("--type", required=True, help="e.g. A2~1, A5~2, D4~1, A4~2, D3~2, B3~1")
        sp.add_argument("--lambda", dest="lam", required=lam_required, help="L<k>")
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--seed", type=int, default=0)

    g = sub.add_parser("graph", help="export a crystal graph")
    common(g)
    g.add_argument("--model", choices=["wall", "path"], default="wall")
    g.add_argument("--depth", type=int, default=4)
    g.add_argument("--format", choices=["dot", "json", "ascii"], default="json")
    g.set_defaults(func=cmd_graph)

    v = sub.add_parser("verify", help="check the wall/path isomorphism to a depth")
    common(v, lam_required=False)
    v.add_argument("--depth", type=int, default=8)
    v.add_argument("--mutate", metavar="R1,R2", help="swap two residues of the first table (harness)")
    v.set_defaults(func=cmd_verify)

    w = sub.add_parser("wall", help="apply an operator word to the ground wall")
    common(w)
    w.add_argument("--word", help="e.g. 'f0 f1 e1'")
    w.add_argument("--random", type=int, default=0, help="random f-word of this length (uses --seed)")
    w.set_defaults(func=cmd_wall)

    c = sub.add_parser("character", help="weight multiplicities of reduced walls")
    common(c)
    c.add_argument("--max-blocks", type=int, default=6)
    c.add_argument("--format", choices=["json", "ascii"], default="ascii")
    c.set_defaults(func=cmd_character)
    return p


def _nonneg(args) -> None:
    for name in ("depth", "max_blocks", "random"):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _nonneg(args)
        return args.func(args)
    except (InvalidType, UsageError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
