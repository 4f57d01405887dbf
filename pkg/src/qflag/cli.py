"""
Command line front end.

    qflag product 213 213
    qflag coeff 213 213 321
    qflag gw 213 213 321 1 0
    qflag verify cyclic 4
    qflag graph transition 3 --dot
    qflag reduce 213 132 132
    qflag table 4 --cache t4.json

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 internal
invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

from . import cache as cache_io
from .exact import RankDeficientError
from .graphs import MAX_GRAPH_N, bruhat_graph, dot_export, json_export, transition_graph, verify_graph
from .permutation import PermutationSyntaxError, format_perm, parse_perm
from .qhring import (
    EngineError, ProductTable, full_table, gw_invariant, quantum_product, structure_poly,
    verify_monk_agreement, verify_ring_axioms, verify_shift_commutation,
)
from .qlaurent import LaurentError
from .symmetry import (
    CalibrationError, calibrate, reduce_min_length, verify_cyclic, verify_orbit_telescoping,
    verify_qqq, verify_reduction, verify_stability,
)

log = logging.getLogger("qflag")

CACHE_ENV = "QFLAG_CACHE_DIR"
QUERY_GUARD = 6
VERIFY_GUARD = 5

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _perms(texts: list) -> list:
    perms = [parse_perm(t) for t in texts]
    ranks = {len(p) for p in perms}
    if len(ranks) != 1:
        raise UsageError(f"rank mismatch among {' '.join(texts)}")
    return perms


def _guard(n: int, args, default: int) -> None:
    limit = args.max_n if args.max_n is not None else default
    if n < 2:
        raise UsageError(f"n must be at least 2, got {n}")
    if n > limit:
        raise UsageError(f"n={n} exceeds the guard {limit}; pass --max-n {n} to override")
    if n > default:
        log.warning("n=%d is above the default guard %d; this may be slow", n, default)


def _cache_path(n: int, args) -> Path | None:
    if args.cache:
        return Path(args.cache)
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root) / f"qflag-table-n{n}.json"
    return None


def _table(n: int, args, complete: bool = False) -> ProductTable:
    path = _cache_path(n, args)
    if path is not None and path.exists():
        table = cache_io.load_table(path, n)
    else:
        table = ProductTable(n)
    if complete and not table.is_complete():
        full_table(n, jobs=args.jobs, limit=n, table=table)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            cache_io.save_table(table, path)
    return table


def _emit(args, text: str, payload=None, rows=None) -> None:
    if args.format == "json" and payload is not None:
        print(json.dumps(payload, sort_keys=True, indent=1))
    elif args.format == "csv" and rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        print(text)


def cmd_product(args) -> int:
    u, v = _perms([args.u, args.v])
    _guard(len(u), args, QUERY_GUARD)
    x = quantum_product(u, v, _table(len(u), args))
    _emit(args, str(x),
          {"u": format_perm(u), "v": format_perm(v), "class": x.to_json()},
          [("perm", "coeff")] + [(format_perm(w), str(p)) for w, p in x.items()])
    return EXIT_OK


def cmd_coeff(args) -> int:
    u, v, w = _perms([args.u, args.v, args.w])
    _guard(len(u), args, QUERY_GUARD)
    p = structure_poly(u, v, w, _table(len(u), args))
    _emit(args, str(p),
          {"u": args.u, "v": args.v, "w": args.w, "poly": p.to_json()},
          [("exps", "coeff")] + [(" ".join(map(str, m.exps)), c) for m, c in p.monomials()])
    return EXIT_OK


def cmd_gw(args) -> int:
    u, v, w = _perms([args.u, args.v, args.w])
    _guard(len(u), args, QUERY_GUARD)
    if len(args.d) != len(u) - 1:
        raise UsageError(f"need {len(u) - 1} degree entries, got {len(args.d)}")
    if any(x < 0 for x in args.d):
        raise UsageError("degree entries must be nonnegative")
    value = gw_invariant(u, v, w, args.d, _table(len(u), args))
    _emit(args, str(value), {"u": args.u, "v": args.v, "w": args.w, "d": args.d, "value": value},
          [("value",), (value,)])
    return EXIT_OK


def _run_verify(kind: str, n: int, args) -> list:
    if kind == "graph":
        if n > MAX_GRAPH_N:
            raise UsageError(f"graph checks are limited to n <= {MAX_GRAPH_N}")
        return [verify_graph(n)]
    table = _table(n, args, complete=True)
    sample = args.sample
    if kind == "axioms":
        reports = verify_ring_axioms(n, table, sample=sample, seed=args.seed)
        reports.append(verify_monk_agreement(n, table))
        shift_sample = None if n <= 4 else (sample or 2000)
        reports.append(verify_shift_commutation(n, table, sample=shift_sample, seed=args.seed))
        return reports
    if kind == "classical":
        reports = verify_ring_axioms(n, table, sample=sample, seed=args.seed)
        return [r for r in reports if r.check == "classical_limit"]
    profile = calibrate(3)
    if kind == "cyclic":
        return [verify_cyclic(n, table, profile), verify_orbit_telescoping(n, profile)]
    if kind == "qqq":
        return [verify_qqq(n, table, profile, sample=sample if sample or n <= 3 else 200,
                           seed=args.seed)]
    if kind == "reduce":
        return [verify_reduction(n, table, profile)]
    if kind == "stability":
        return [verify_stability(n, table, _table(n - 1, args, complete=True), profile)]
    raise UsageError(f"unknown verification kind {kind!r}")


def cmd_verify(args) -> int:
    _guard(args.n, args, VERIFY_GUARD)
    reports = _run_verify(args.kind, args.n, args)
    ok = all(r.ok for r in reports)
    _emit(args, "\n".join(r.summary() for r in reports),
          [r.to_dict() for r in reports] if len(reports) > 1 else reports[0].to_dict(),
          [("check", "n", "tested", "failed")] + [(r.check, r.n, r.tested, r.failed) for r in reports])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_graph(args) -> int:
    if not 1 <= args.n <= MAX_GRAPH_N:
        raise UsageError(f"graphs are limited to n <= {MAX_GRAPH_N}")
    g = bruhat_graph(args.n) if args.kind == "bruhat" else transition_graph(args.n)
    if args.dot or args.format == "dot":
        sys.stdout.write(dot_export(g))
    elif args.format == "json":
        print(json_export(g))
    else:
        rows = [("from", "to", "label")] + [
            (format_perm(u), format_perm(w), f"{a}{b}") for u, w, (a, b) in g.sorted_edges()]
        _emit(args, "\n".join(f"{r[0]} -> {r[1]} ({r[2]})" for r in rows[1:]), None, rows)
    return EXIT_OK


def cmd_reduce(args) -> int:
    u, v, w = _perms([args.u, args.v, args.w])
    _guard(len(u), args, QUERY_GUARD)
    outcome = reduce_min_length(u, v, w)
    a, b, c = outcome.shift
    text = f"{outcome.kind}, (a,b,c)=({a},{b},{c}), min length {outcome.min_length}"
    if outcome.kind == "Classical":
        text = (f"Classical, factor {outcome.monomial}, value {outcome.value}, "
                f"(a,b,c)=({a},{b},{c})")
    _emit(args, text, outcome.to_dict())
    return EXIT_OK


def cmd_table(args) -> int:
    _guard(args.n, args, VERIFY_GUARD)
    table = _table(args.n, args, complete=True)
    if args.format == "json":
        print(json.dumps(cache_io.table_to_dict(table), sort_keys=True))
        return EXIT_OK
    rows = [("u", "v", "class")] + [
        (format_perm(u), format_perm(v), str(x)) for u, v, x in table.entries()]
    text = "\n".join(f"s[{r[0]}] * s[{r[1]}] = {r[2]}" for r in rows[1:])
    _emit(args, text, None, rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv", "dot"), default="text")
    common.add_argument("--cache", help="product table cache file (JSON, .gz allowed)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for table builds")
    common.add_argument("--max-n", type=int, default=None, help="override the rank guard")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="qflag", description="Quantum cohomology of flag manifolds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", parents=[common], help="sigma_u * sigma_v")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("coeff", parents=[common], help="structure polynomial C_{u,v,w}")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("gw", parents=[common], help="Gromov-Witten invariant <u,v,w>_d")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p.add_argument("d", type=int, nargs="+")
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("kind", choices=("axioms", "classical", "cyclic", "qqq", "reduce", "stability", "graph"))
    p.add_argument("n", type=int)
    p.add_argument("--sample", type=int, default=None, help="number of sampled triples")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", parents=[common], help="Bruhat order or transition graph")
    p.add_argument("kind", choices=("bruhat", "transition"))
    p.add_argument("n", type=int)
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("reduce", parents=[common], help="minimal-length cyclic reduction")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("w")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("table", parents=[common], help="build (and cache) the full product table")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, PermutationSyntaxError, cache_io.CacheFormatError) as exc:
        print(f"qflag: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EngineError, RankDeficientError, CalibrationError, LaurentError) as exc:
        print(f"qflag: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
