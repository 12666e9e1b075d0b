"""Command-line front end.

Exit codes: 0 = true / SAT / all pass, 1 = false / UNSAT / some failure,
2 = malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import InputError, ScaleGuardError
from .graph import Graph, parse_graph
from .labeling import PREDICATES, ClassificationReport, classify, parse_labeling, validate_iasl
from .search import build_max_iasf_graph, enumerate_labelings, search_iasfl
from .setcore import IntSet
from .theorems import run_theorem_suite


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read: {exc.strerror}", path) from None


def _load_graph(path: str) -> Graph:
    return parse_graph(_read(path), source=path)


def _ground(text: str) -> IntSet:
    try:
        return IntSet.parse(text)
    except InputError as exc:
        raise InputError(exc.message, "--ground") from None


def cmd_verify(args) -> int:
    g = _load_graph(args.graph)
    f = parse_labeling(_read(args.labeling), g, source=args.labeling)
    base = validate_iasl(g, f)
    if not base.iasl:
        if args.json:
            out = {name: {"holds": None, "witness": None} for name in PREDICATES}
            out["iasl"] = out["iasi"] = {"holds": False, "witness": base.iasl.witness}
            out["uniform_k"] = None
            print(json.dumps(out, indent=2))
        else:
            print(f"iasl: false ({base.iasl.witness})")
        return 1
    report = classify(g, f)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print("\n".join(report.to_lines()))
    return 0


def cmd_construct(args) -> int:
    x = _ground(args.ground)
    g, f = build_max_iasf_graph(x)
    Path(args.out_graph).write_text(g.to_text(), encoding="utf-8")
    Path(args.out_labeling).write_text(f.to_text(g.vertices), encoding="utf-8")
    pend = sum(1 for v in g.vertices if g.degree(v) == 1)
    print(f"maximal IASF-graph of {x}: {g.order} vertices, {len(g.edges)} edges, {pend} pendant vertices")
    return 0


def cmd_search(args) -> int:
    g = _load_graph(args.graph)
    res = search_iasfl(g, args.bound)
    if args.json:
        print(json.dumps(res.to_dict(), indent=2))
    elif res.sat:
        print(f"SAT: X = {res.witness.ground} (explored {res.explored})")
        print(res.witness.to_text(g.vertices), end="")
    else:
        print(f"UNSAT: {res.reason}")
        print(f"searched: {res.searched_universe}")
    return 0 if res.sat else 1


def cmd_oracle(args) -> int:
    g = _load_graph(args.graph)
    x = _ground(args.ground)
    res = enumerate_labelings(
        g, x, args.predicate, collect=not args.count_only, override_guard=args.override_guard
    )
    print(f"count: {res.count}")
    for f in res.labelings:
        print(", ".join(f"{v}={f[v]}" for v in g.vertices))
    return 0


def cmd_theorems(args) -> int:
    rep = run_theorem_suite(args.max_n)
    print("\n".join(rep.lines()))
    print(rep.to_json())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="iasfl", description="Integer additive set-filtered labelings of graphs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="classify a labeled graph")
    v.add_argument("--graph", required=True)
    v.add_argument("--labeling", required=True)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("construct", help="write the maximal IASF-graph of a ground set")
    c.add_argument("--ground", required=True, help="set literal such as 0,1,2")
    c.add_argument("--out-graph", required=True)
    c.add_argument("--out-labeling", required=True)
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="decide IASFL admissibility over bounded ground sets")
    s.add_argument("--graph", required=True)
    s.add_argument("--bound", type=int, default=8, help="largest integer in a candidate ground set")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_search)

    o = sub.add_parser("oracle", help="brute-force count of labelings satisfying a predicate")
    o.add_argument("--graph", required=True)
    o.add_argument("--ground", required=True)
    o.add_argument("--predicate", required=True, choices=PREDICATES)
    o.add_argument("--count-only", action="store_true")
    o.add_argument("--override-guard", action="store_true", help="lift the |V|<=6, |X|<=4 guard")
    o.set_defaults(func=cmd_oracle)

    t = sub.add_parser("theorems", help="run the theorem suite")
    t.add_argument("--max-n", type=int, default=4, help="largest ground-set size (2..5)")
    t.set_defaults(func=cmd_theorems)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ScaleGuardError) as exc:
        print(f"iasfl {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
