"""``factor-forge`` command line.

Exit codes: 0 success (feasible, exists, verified), 1 negative answer
(infeasible, no factorization, verification failed), 2 usage or input error,
3 an internal size cap was exceeded.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from multiprocessing import Pool

from . import extremal, oracle, thresholds
from .errors import (ConstructionFailedError, FactorForgeError, OutOfScopeError,
                     SearchExhaustedError, TooLargeError)
from .factorizer import (factorize, read_factorization, verify_factorization,
                         write_factorization)
from .graph import load_graph, write_graph

OK, NEGATIVE, USAGE, CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE)


def _emit(args, payload, text) -> None:
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True))
    elif text:
        print(text)


def _write_or_print(path, text) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_number(v):
    return "∞" if v == thresholds.INFINITY else v


def cmd_sigma(args) -> int:
    p = thresholds.ThresholdParams(args.r, args.s, args.a, args.t)
    if not args.all_formulas:
        value = thresholds.sigma(p)
        _emit(args, {"params": p.as_dict(), "sigma": value}, str(value))
        return OK
    rep = thresholds.crosscheck(p)
    doc = rep.to_json()
    lines = [f"{name} {' '.join(map(str, v)) if isinstance(v, tuple) else _json_number(v)}"
             for name, v in rep.values.items()]
    _emit(args, {"params": doc["params"], "values": doc["values"]}, "\n".join(lines))
    return OK


def cmd_interval(args) -> int:
    fs = thresholds.feasible_x_set(args.d, args.s, args.r, args.a)
    payload = {
        "lower": str(fs.lower), "upper": str(fs.upper),
        "lower_open": fs.lower_open, "upper_open": fs.upper_open,
        "members": list(fs.members), "side_condition_met": fs.side_condition_met,
    }
    _emit(args, payload, " ".join(map(str, fs.members)))
    return OK if fs.members else NEGATIVE


def cmd_factorize(args) -> int:
    G = load_graph(args.graph)
    f = factorize(G, args.r, args.a, args.x, seed=args.seed, exact_cap=args.cap)
    if f is None:
        _emit(args, {"exists": False}, "no factorization")
        return NEGATIVE
    text = write_factorization(f)
    if args.json:
        if args.out:
            _write_or_print(args.out, text)
        _emit(args, {"exists": True, "x": f.x, "r": f.r, "a": f.a,
                     "factor_of": list(f.factor_of)}, "")
    else:
        _write_or_print(args.out, text)
    return OK


def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    with open(args.factorization, encoding="utf-8") as fh:
        f = read_factorization(fh.read(), G)
    report = verify_factorization(G, f)
    _emit(args, {"ok": report.ok, "violations": report.violations},
          "ok" if report.ok else "\n".join(report.violations))
    return OK if report.ok else NEGATIVE


def _boundary(args):
    if args.family == "EO":
        return extremal.gen_boundary_EO(args.r, args.s, args.a, args.x)
    if args.family == "OO":
        return extremal.gen_boundary_OO(args.r, args.s, args.a, args.x)
    if args.end == "top":
        return extremal.gen_lemma14_topend(args.x * (args.r + args.a), args.r, args.a)
    return extremal.gen_lemma14_regular(args.x * args.r, args.r)


def cmd_boundary(args) -> int:
    inst = _boundary(args)
    if isinstance(inst, extremal.BoundaryInstance):
        G, sidecar = inst.graph, inst.sidecar()
    else:
        G = inst
        sidecar = {"family": "lemma14", "end": args.end, "r": args.r, "a": args.a, "x": args.x,
                   "n": G.n, "m": G.m}
    text = write_graph(G)
    if args.out:
        _write_or_print(args.out, text)
        with open(args.out + ".json", "w", encoding="utf-8") as fh:
            json.dump(sidecar, fh, indent=2, sort_keys=True)
    if args.json:
        _emit(args, {**sidecar, "graph": text}, "")
    elif not args.out:
        sys.stdout.write(text)
    return OK


def cmd_oracle(args) -> int:
    G = load_graph(args.graph)
    v = oracle.exists_factorization(G, args.r, args.a, args.x, cap=args.cap)
    payload = {"exists": v.exists, "exhaustive": v.exhaustive, "nodes_explored": v.nodes_explored,
               "factor_of": list(v.witness.factor_of) if v.witness else None}
    _emit(args, payload, f"{'exists' if v.exists else 'not exists'} ({v.nodes_explored} nodes)")
    return OK if v.exists else NEGATIVE


def parse_grid(spec: str) -> dict[str, range]:
    """``"r=1:6,s=0:4,a=1:6,t=1:4"`` -> inclusive ranges; ``"r=2"`` is a single value."""
    grid = {}
    for part in filter(None, (p.strip() for p in spec.split(","))):
        key, sep, rng = part.partition("=")
        if not sep or key not in ("r", "s", "a", "t"):
            raise ValueError(f"bad grid component {part!r}")
        lo, _, hi = rng.partition(":")
        lo, hi = int(lo), int(hi or lo)
        if hi < lo:
            raise ValueError(f"empty range in {part!r}")
        grid[key] = range(lo, hi + 1)
    missing = {"r", "s", "a", "t"} - grid.keys()
    if missing:
        raise ValueError(f"grid is missing {', '.join(sorted(missing))}")
    return grid


def sigma_cell(cell) -> dict:
    r, s, a, t = cell
    out = {"r": r, "s": s, "a": a, "t": t}
    try:
        p = thresholds.ThresholdParams(r, s, a, t)
        value = thresholds.sigma(p)
        search = thresholds.sigma_by_search(p, value + 3 * (r + a))
    except (OutOfScopeError, SearchExhaustedError, ZeroDivisionError) as exc:
        return {**out, "status": "out_of_scope", "note": str(exc)}
    out.update(sigma=value, search=search)
    if value == search:
        out["status"] = "agree"
    elif a == 1 and s >= 2 and thresholds.crosscheck(p).discrepancy("sigma_a1", "sigma") is not None:
        out["status"] = "flagged"
    else:
        out["status"] = "mismatch"
    return out


def cmd_sweep(args) -> int:
    if args.kind == "conformance":
        if args.r is None or args.a is None:
            raise ValueError("conformance sweeps need -r and -a")
        corpus = oracle.read_corpus(args.corpus) if args.corpus else oracle.fixture_graphs()
        rep = oracle.conformance_sweep(corpus, args.r, args.a)
        lines = [f"{c['graph']} {c['x']} {c['category']} {c['status']}" for c in rep.cells]
        _emit(args, rep.to_json(), "\n".join(lines))
        return NEGATIVE if rep.disagreements else OK
    grid = parse_grid(args.grid)
    cells = list(itertools.product(grid["r"], grid["s"], grid["a"], grid["t"]))
    if args.jobs > 1:
        with Pool(args.jobs) as pool:
            rows = pool.map(sigma_cell, cells)
    else:
        rows = [sigma_cell(c) for c in cells]
    lines = [" ".join(str(row.get(k, "-")) for k in ("r", "s", "a", "t", "sigma", "search", "status"))
             for row in rows]
    _emit(args, {"cells": rows}, "\n".join(lines))
    return NEGATIVE if any(row["status"] == "mismatch" for row in rows) else OK


def cmd_crosscheck(args) -> int:
    rep = thresholds.crosscheck(thresholds.ThresholdParams(args.r, args.s, args.a, args.t))
    doc = rep.to_json()
    lines = [f"{k} {v}" for k, v in doc["values"].items()]
    lines += [f"discrepancy {d['pair'][0]} {d['pair'][1]} {d['difference']}"
              for d in doc["discrepancies"]]
    lines += [f"violation {v}" for v in doc["violations"]]
    lines += [f"note {n}" for n in doc["notes"]]
    _emit(args, doc, "\n".join(lines))
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="factor-forge",
                     description="Degree-constrained factorizations of simple graphs.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def params(p, *names):
        for name in names:
            p.add_argument(f"-{name}", type=int, required=True)

    p = verb("sigma", cmd_sigma, "threshold sigma(r, s, a, t)")
    params(p, "r", "s", "a")
    p.add_argument("-t", type=int, default=1)
    p.add_argument("--all-formulas", action="store_true")

    p = verb("interval", cmd_interval, "feasible factor counts for (d, d+s)-graphs")
    params(p, "d", "s", "r", "a")

    p = verb("factorize", cmd_factorize, "factorize a graph file")
    p.add_argument("graph")
    params(p, "r", "a", "x")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=40, help="edge cap for exact search")

    p = verb("verify", cmd_verify, "check a factorization file against a graph")
    p.add_argument("graph")
    p.add_argument("factorization")

    p = verb("boundary", cmd_boundary, "generate a graph with no x-factor factorization")
    p.add_argument("--family", choices=("EO", "OO", "lemma14"), required=True)
    params(p, "r", "a", "x")
    p.add_argument("-s", type=int, default=0)
    p.add_argument("--end", choices=("low", "top"), default="low",
                   help="lemma14 only: exclude x = d/r (low) or x = d/(r+a) (top)")
    p.add_argument("--out")

    p = verb("oracle", cmd_oracle, "exhaustive existence check")
    p.add_argument("graph")
    params(p, "r", "a", "x")
    p.add_argument("--cap", type=int, default=oracle.ORACLE_CAP)

    p = verb("sweep", cmd_sweep, "grid or conformance sweep")
    p.add_argument("--kind", choices=("sigma", "conformance"), default="sigma")
    p.add_argument("--grid", default="r=1:6,s=0:4,a=1:6,t=1:4")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-r", type=int)
    p.add_argument("-a", type=int)
    p.add_argument("--corpus", help="corpus directory (default: built-in fixtures)")

    p = verb("crosscheck", cmd_crosscheck, "compare every applicable formula")
    params(p, "r", "s", "a")
    p.add_argument("-t", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE
    args.seed = oracle.default_seed()
    try:
        return args.func(args)
    except (TooLargeError, SearchExhaustedError, ConstructionFailedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CAP
    except (FactorForgeError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
