"""Command-line entry point: ``zcolor <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
Graphs are read from DIMACS ``.col`` files, edge lists, or generator specs
such as ``gnp:20,0.3,seed=1``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bench as bench_mod
from . import exact, ilp
from .bounds import bounds_report
from .coloring import Coloring, verify_z
from .generators import gen
from .graph import Graph, GraphFormatError, read_graph, write_dimacs
from .special import build_array, format_array
from .special.classify import class_tags, classify
from .transform import dsatur, greedy, iz, z_transform

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(source: str) -> Graph:
    if os.path.exists(source):
        return read_graph(source)
    try:
        return gen(source)
    except ValueError as e:
        raise UsageError(f"{source}: not a file and not a generator spec ({e})") from None


def _emit(args, payload: dict, human: str, csv_rows: list[list] | None = None):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv" and csv_rows is not None:
        for row in csv_rows:
            print(",".join(str(x) for x in row))
    else:
        print(human)


def _parse_order(text: str | None, n: int) -> list[int] | None:
    if text is None:
        return None
    if text in ("natural", "id"):
        return list(range(n))
    if text == "degree":
        return []  # filled by caller
    try:
        order = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--order: expected comma-separated vertex ids, got {text!r}") from None
    if sorted(order) != list(range(n)):
        raise UsageError("--order must list every vertex exactly once")
    return order


def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    rep = bounds_report(g)
    rows = [["n", "edges", "delta", "delta2", "m", "m_star", "chain_ok"],
            [rep.n, rep.edges, rep.delta, rep.delta2, rep.m, rep.m_star, int(rep.chain_ok)]]
    _emit(args, rep.to_json(), rep.describe(), rows)
    return EXIT_OK


def cmd_color(args) -> int:
    g = load_graph(args.graph)
    order = _parse_order(args.order, g.n)
    if order == []:
        order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    trace = None
    if args.heuristic == "greedy":
        c = greedy(g, order)
    elif args.heuristic == "dsatur":
        c = dsatur(g)
    elif args.heuristic == "iz":
        c = iz(g, budget=args.budget, seed=args.seed, order=order)
    else:
        start = greedy(g, order)
        if args.start:
            with open(args.start) as fh:
                start = Coloring.from_json(fh.read())
        try:
            c, trace = z_transform(g, start)
        except ValueError as e:
            raise UsageError(f"--start: {e}") from None
    rep = verify_z(g, c)
    if args.trace and trace is not None:
        with open(args.trace, "w") as fh:
            fh.write(trace.to_jsonl())
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(c.to_json(), fh)
            fh.write("\n")
    payload = {"heuristic": args.heuristic, "coloring": c.to_json(), "report": rep.to_json()}
    human = (f"{args.heuristic}: {c.k} colors, proper={rep.proper} grundy={rep.grundy} "
             f"z_valid={rep.z_valid}\ncolors: {' '.join(map(str, c.colors))}")
    _emit(args, payload, human, [["heuristic", "colors", "z_valid"], [args.heuristic, c.k, int(rep.z_valid)]])
    return EXIT_OK


def cmd_exact(args) -> int:
    g = load_graph(args.graph)
    names = exact.INVARIANTS if args.invariant == "all" else (args.invariant,)
    results = {}
    try:
        for name in names:
            results[name] = exact.oracle(name, g, limit=args.limit, timeout=args.timeout)
    except exact.OracleLimitError as e:
        raise UsageError(str(e)) from None
    except exact.OracleTimeout as e:
        print(f"timeout: {e}", file=sys.stderr)
        return EXIT_FAIL
    payload = {name: {"value": r.value, "witness": r.witness.to_json(),
                      "nice": r.zwitness.to_json() if r.zwitness else None}
               for name, r in results.items()}
    human = "\n".join(f"{name} = {r.value}  colors: {' '.join(map(str, r.witness.colors))}"
                      for name, r in results.items())
    rows = [["invariant", "value"]] + [[name, r.value] for name, r in results.items()]
    _emit(args, payload, human, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    try:
        with open(args.coloring) as fh:
            c = Coloring.from_json(fh.read())
    except (OSError, ValueError) as e:
        raise UsageError(f"{args.coloring}: {e}") from None
    if len(c) != g.n:
        raise UsageError(f"{args.coloring}: {len(c)} colors for {g.n} vertices")
    rep = verify_z(g, c)
    ok = {"z": rep.z_valid, "bstar": rep.bstar_valid, "proper": rep.proper, "grundy": rep.grundy}[args.require]
    lines = [f"k={rep.k} proper={rep.proper} grundy={rep.grundy} z_valid={rep.z_valid} bstar_valid={rep.bstar_valid}"]
    if rep.witness:
        parts = " ".join(f"{j}:{v}" for j, v in sorted(rep.witness.partners.items()))
        lines.append(f"nice vertex {rep.witness.nice}, partners {parts}")
    lines.append("PASS" if ok else f"FAIL ({args.require})")
    payload = dict(rep.to_json(), require=args.require, ok=ok)
    _emit(args, payload, "\n".join(lines), [["require", "ok"], [args.require, int(ok)]])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_classes(args) -> int:
    g = load_graph(args.graph)
    tags = class_tags(g)
    res = classify(g)
    payload = {"classes": tags, "result": res.to_json() if res else None}
    if res is None:
        human = "classes: none recognised"
    else:
        human = (f"classes: {', '.join(tags)}\nsolver: {res.class_tag}  b* {'>=' if res.bound == 'lower' else '='} "
                 f"{res.value}" + (f"  z = {res.z_value}" if res.z_value is not None else "")
                 + f"\nwitness: {' '.join(map(str, res.witness.colors)) if res.witness else 'none'}"
                 + (f" ({res.witness_source})" if res.witness else "")
                 + "".join(f"\nnote: {x}" for x in res.notes))
    _emit(args, payload, human, [["classes", "value"], [" ".join(tags), res.value if res else ""]])
    return EXIT_OK


def cmd_ilp(args) -> int:
    g = load_graph(args.graph)
    build = ilp.build_z_model if args.target == "z" else ilp.build_bstar_model
    model = build(g, repaired=not args.verbatim)
    text = ilp.write_lp(model)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    payload: dict = {"target": args.target, "repaired": model.repaired, "colors": model.colors,
                     "variables": len(model.variables), "rows": model.counts()}
    human = [f"{args.target} model ({'repaired' if model.repaired else 'verbatim'}): "
             f"{len(model.variables)} variables, {len(model.rows)} rows, |C|={model.colors}"]
    if args.solve_tiny:
        try:
            res = ilp.solve_tiny(model, limit=args.limit)
        except ValueError as e:
            raise UsageError(str(e)) from None
        payload["solve"] = res.to_json()
        human.append(f"solve_tiny: {res.status}" + (f", objective {res.objective}" if res.objective is not None else ""))
    if not args.output and args.format == "human" and not args.solve_tiny:
        human = [text.rstrip("\n")]
    _emit(args, payload, "\n".join(human))
    return EXIT_OK


def cmd_array(args) -> int:
    try:
        arr = build_array(args.m)
    except ValueError as e:
        raise UsageError(str(e)) from None
    rows = [[f"row{i}"] + row for i, row in enumerate(arr.rows, start=1)]
    _emit(args, {"m": arr.m, "rows": arr.rows}, format_array(arr, colors=args.colors), rows)
    return EXIT_OK


def cmd_gen(args) -> int:
    g = load_graph(args.spec)
    if args.format == "json":
        print(json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, sort_keys=True))
    elif args.format == "csv":
        for u, v in g.edges():
            print(f"{u},{v}")
    else:
        sys.stdout.write(write_dimacs(g))
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.suite not in bench_mod.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(bench_mod.SUITES))}")
    heur = tuple(args.heuristics.split(",")) if args.heuristics else bench_mod.HEURISTICS
    for h in heur:
        if h not in bench_mod.HEURISTICS:
            raise UsageError(f"unknown heuristic {h!r}")
    rows = bench_mod.run_bench(bench_mod.SUITES[args.suite], heur, seed=args.seed, budget=args.budget, log=sys.stderr)
    if args.format == "json":
        print(json.dumps([{"instance": r.instance, "heuristic": r.heuristic, "colors": r.colors,
                           "m_star_plus_1": r.m_star_plus_1, "chain_ok": r.chain_ok} for r in rows], sort_keys=True))
    else:
        sys.stdout.write(bench_mod.to_csv(rows, args.timings_inline))
    if not args.timings_inline:
        bench_mod.write_timings(rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="zcolor", description="z-coloring and b*-coloring toolkit")
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json", "csv"), default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help, parents=[common])

    s = add("bounds", help="degree bounds m*, Delta2, Delta")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)

    s = add("color", help="run a coloring heuristic")
    s.add_argument("graph")
    s.add_argument("--heuristic", choices=("greedy", "dsatur", "iz", "ztransform"), default="greedy")
    s.add_argument("--order", help="natural, degree, or comma-separated vertex ids")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=50)
    s.add_argument("--start", help="coloring JSON to transform (ztransform only)")
    s.add_argument("--trace", help="write the transform trace as JSON lines")
    s.add_argument("--output", "-o", help="write the coloring JSON here")
    s.set_defaults(func=cmd_color)

    s = add("exact", help="exhaustive oracle for small graphs")
    s.add_argument("graph")
    s.add_argument("--invariant", choices=exact.INVARIANTS + ("all",), default="z")
    s.add_argument("--limit", type=int, default=exact.DEFAULT_LIMIT)
    s.add_argument("--timeout", type=float)
    s.set_defaults(func=cmd_exact)

    s = add("verify", help="check a coloring JSON against a graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.add_argument("--require", choices=("z", "bstar", "proper", "grundy"), default="z")
    s.set_defaults(func=cmd_verify)

    s = add("classes", help="recognise structured classes and report b*")
    s.add_argument("graph")
    s.set_defaults(func=cmd_classes)

    s = add("ilp", help="emit the 0-1 model in LP format")
    s.add_argument("graph")
    s.add_argument("--target", choices=("z", "bstar"), default="z")
    grp = s.add_mutually_exclusive_group()
    grp.add_argument("--repaired", dest="verbatim", action="store_false", help="relax rows for unused colors (default)")
    grp.add_argument("--verbatim", dest="verbatim", action="store_true",
                     help="b-vertex and nice-vertex rows without the relaxation")
    grp.add_argument("--paper-exact", dest="verbatim", action="store_true", help=argparse.SUPPRESS)
    s.add_argument("--solve-tiny", action="store_true")
    s.add_argument("--limit", type=int, default=2_000_000, help="node budget for --solve-tiny")
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_ilp, verbatim=False)

    s = add("array", help="print the label array A_m")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--colors", action="store_true", help="append the color of each position")
    s.set_defaults(func=cmd_array)

    s = add("gen", help="materialise a generator spec")
    s.add_argument("spec")
    s.set_defaults(func=cmd_gen)

    s = add("bench", help="compare greedy, DSATUR and IZ")
    s.add_argument("--suite", default="small")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=50)
    s.add_argument("--heuristics", help="comma-separated subset of greedy,dsatur,iz")
    s.add_argument("--timings-inline", action="store_true", help="add a millis column to the CSV")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"zcolor: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as e:
        print(f"zcolor: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"zcolor: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
