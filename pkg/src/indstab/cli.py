"""Command-line interface.

Graph arguments accept a graph6 string or @file with one graph6 line per
graph.  Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from indstab import families
from indstab.enumeration import And, enumerate_graphs, parse_predicate
from indstab.erdos_rogers import er_f, er_table
from indstab.graph6 import g6_decode, g6_encode
from indstab.graphs import Graph, vset_members
from indstab.mis import alpha, max_independent_set
from indstab.stability import alpha_drop, is_stable, is_tight_stable
from indstab.verify import SUITE_ORDER, VerifyConfig, run_all


def _graphs_from_arg(arg: str) -> list[Graph]:
    if arg.startswith("@"):
        out = []
        with open(arg[1:], encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(g6_decode(line))
        if not out:
            raise ValueError(f"no graphs in {arg[1:]}")
        return out
    return [g6_decode(arg)]


def _add_jobs(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--jobs", type=int, default=os.cpu_count() or 1,
        help="worker count (default: hardware parallelism)",
    )


def _cmd_alpha(args) -> int:
    for g in _graphs_from_arg(args.graph):
        if args.witness:
            r = max_independent_set(g)
            members = ",".join(str(v) for v in vset_members(r.witness))
            print(f"{r.alpha} {{{members}}}")
        else:
            print(alpha(g))
    return 0


def _cmd_drop(args) -> int:
    for g in _graphs_from_arg(args.graph):
        print(alpha_drop(g, args.k))
    return 0


def _cmd_stable(args) -> int:
    for g in _graphs_from_arg(args.graph):
        print("true" if is_stable(g, args.k, args.l) else "false")
    return 0


def _cmd_tight(args) -> int:
    for g in _graphs_from_arg(args.graph):
        print("true" if is_tight_stable(g, args.k, args.l) else "false")
    return 0


def _cmd_construct(args) -> int:
    fam = args.family
    if fam == "circulant":
        if args.n is None or not args.diff:
            raise ValueError("circulant needs --n and at least one --diff")
        g = families.circulant(args.n, set(args.diff))
    elif fam in ("stable3", "stable4"):
        if args.m is None:
            raise ValueError(f"{fam} needs --m")
        fn = families.stable3_circulant if fam == "stable3" else families.stable4_circulant
        g = fn(args.m)
    elif fam == "even20":
        if args.k is None:
            raise ValueError("even20 needs --k")
        g = families.even20_circulant(args.k)
    elif fam == "figure2":
        g = families.figure2()
    elif fam == "lift":
        if args.graph is None or args.j is None:
            raise ValueError("lift needs --graph and --j")
        (base,) = _graphs_from_arg(args.graph)
        g = families.lift(base, args.j)
    elif fam == "sandwich":
        if args.n is None:
            raise ValueError("sandwich needs --n")
        g = families.sandwich_sample(args.n, args.seed)
    else:
        if args.n is None:
            raise ValueError(f"{fam} needs --n")
        g = {
            "kn_tight": families.kn_tight,
            "mn_matching": families.mn_matching,
            "cycle": families.cycle,
            "path": families.path,
            "wheel": families.wheel,
        }[fam](args.n)
    print(g6_encode(g))
    return 0


def _cmd_enumerate(args) -> int:
    predicate = None
    if args.filter:
        parts = [parse_predicate(f) for f in args.filter]
        predicate = parts[0] if len(parts) == 1 else And(tuple(parts))
    cap = predicate.alpha_cap(args.n) if predicate is not None else None
    stream = enumerate_graphs(
        args.n,
        jobs=args.jobs,
        allow_long=args.allow_long,
        max_alpha=cap,
        predicate=predicate,
    )
    if args.count_only:
        print(sum(1 for _ in stream))
    else:
        for _, g in stream:
            print(g6_encode(g))
    return 0


def _cmd_erdos_rogers(args) -> int:
    if args.table:
        print("s,t,predicted,computed,match")
        for r in er_table(args.n, jobs=args.jobs):
            pred = "-" if r.predicted is None else str(r.predicted)
            match = "-" if r.match is None else ("yes" if r.match else "no")
            print(f"{r.s},{r.t},{pred},{r.computed},{match}")
        return 0
    if args.s is None or args.t is None:
        raise ValueError("need --s and --t (or --table)")
    print(er_f(args.n, args.s, args.t, jobs=args.jobs))
    return 0


def _cmd_verify(args) -> int:
    config = VerifyConfig(
        max_n=args.max_n,
        jobs=args.jobs,
        allow_long=args.allow_long,
        suites=tuple(args.suite) if args.suite else SUITE_ORDER,
    )
    report = run_all(config)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(include_timings=args.timings))
    if args.format == "json":
        out = report.to_json(include_timings=args.timings)
    else:
        out = report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0 if report.ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="indstab",
        description="Vertex-removal stability of graph independence numbers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", help="independence number of graph6 input")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("--witness", action="store_true", help="also print a witness set")
    p.set_defaults(fn=_cmd_alpha)

    p = sub.add_parser("drop", help="worst-case alpha drop over k-vertex removals")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(fn=_cmd_drop)

    p = sub.add_parser("stable", help="test (k,l)-stability")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_stable)

    p = sub.add_parser("tight", help="test tight (k,l)-stability")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=_cmd_tight)

    p = sub.add_parser("construct", help="emit a named family member as graph6")
    p.add_argument("--family", required=True, choices=sorted(families.FAMILIES))
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--diff", type=int, action="append", help="circulant difference")
    p.add_argument("--graph", help="base graph for lift (graph6 or @file)")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("enumerate", help="stream all n-vertex graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--filter", action="append",
        help="predicate NAME:ARGS, repeatable (conjunction)",
    )
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--allow-long", action="store_true")
    _add_jobs(p)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("erdos-rogers", help="exact Erdos-Rogers values at small n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--table", action="store_true", help="CSV grid over all (s,t)")
    _add_jobs(p)
    p.set_defaults(fn=_cmd_erdos_rogers)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suite", action="append", choices=SUITE_ORDER)
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--json", help="write a JSON report to this path")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", help="write the report to this path instead of stdout")
    p.add_argument("--timings", action="store_true", help="include durations in JSON")
    p.add_argument("--allow-long", action="store_true")
    _add_jobs(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
