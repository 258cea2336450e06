"""Command-line front end.

Graphs travel between subcommands as graph6 text, one graph per line on
the standard streams, so invocations compose under ordinary shell pipes:

    hamconn construct --family F --n 10 --delta 3 | hamconn oracle hc

Exit codes: 0 success / certified / property holds, 1 oracle-false or
prediction mismatch, 2 inconclusive, 64 usage or input error.
All diagnostics go to stderr; stdout carries only payload.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Iterable, Sequence

from .bounds import extremal_family, phi, reference_bound
from .cliques import count_cliques, f_s_formula, g_s_formula, lambda_s
from .constructions import build_classical
from .errors import CapacityError, Graph6ParseError, ParameterError
from .graph import Graph, decode_graph6, encode_graph6, export_dot
from .oracle import DEFAULT_DP_CAP, hamiltonian_connected
from .sufficiency import Outcome, lick_test, ore_test, size_test
from .transforms import hc_closure, t_disintegration
from .verify import exhaustive_clique_extremal, exhaustive_extremal, sample_corollary1

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so run() owns exit codes."""

    def error(self, message):
        raise _UsageError(message)


def _common_flags(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--format", choices=formats, default=formats[0],
                   help=f"output format (default {formats[0]})")
    p.add_argument("--dp-cap", type=int, default=DEFAULT_DP_CAP, metavar="N",
                   help="largest order the spanning-path solver accepts")
    p.add_argument("--threads", type=int, default=None, metavar="K",
                   help="worker threads for sweeps")
    p.add_argument("--seed", type=int, default=0, metavar="S",
                   help="seed for randomized subcommands")


def _build_parser() -> _Parser:
    top = _Parser(prog="hamconn", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")

    p = sub.add_parser("construct", parents=[], help="emit a named extremal graph")
    p.add_argument("--family", required=True,
                   choices=["F", "G", "ore-nh-a", "ore-nh-b", "ore-nhc-a", "ore-nhc-b"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, default=None)
    _common_flags(p, ["graph6", "dot"])

    p = sub.add_parser("cliques", help="count cliques or evaluate clique formulas")
    mode = p.add_subparsers(dest="mode", metavar="MODE")
    pc = mode.add_parser("count", help="count s-cliques of graph6 graphs on stdin")
    pc.add_argument("--s", type=int, required=True)
    _common_flags(pc, ["json", "csv"])
    pf = mode.add_parser("formula", help="evaluate a closed-form clique count")
    pf.add_argument("which", choices=["f", "g", "lambda"])
    pf.add_argument("--n", type=int, required=True)
    pf.add_argument("--delta", type=int, default=None)
    pf.add_argument("--x", type=int, default=None, help="split point for lambda")
    pf.add_argument("--s", type=int, required=True)
    _common_flags(pf, ["json", "csv"])

    p = sub.add_parser("bounds", help="evaluate size and clique bounds")
    mode = p.add_subparsers(dest="mode", metavar="MODE")
    pt = mode.add_parser("table", help="bound table over an order range")
    pt.add_argument("--n-range", required=True, metavar="A:B",
                    help="inclusive order range, e.g. 8:12")
    _common_flags(pt, ["csv", "json"])
    pv = mode.add_parser("value", help="one bound value")
    pv.add_argument("--kind", required=True)
    pv.add_argument("--n", type=int, required=True)
    pv.add_argument("--delta", type=int, default=None)
    pv.add_argument("--s", type=int, default=None)
    _common_flags(pv, ["json", "csv"])

    p = sub.add_parser("closure", help="close graph6 graphs from stdin")
    p.add_argument("--protect", type=int, default=None, metavar="V",
                   help="vertex barred from receiving closure edges")
    _common_flags(p, ["graph6", "dot"])

    p = sub.add_parser("core", help="iteratively delete vertices of degree <= t")
    p.add_argument("--t", type=int, required=True)
    _common_flags(p, ["graph6", "dot"])

    p = sub.add_parser("check", help="run fast certificates on stdin graphs")
    p.add_argument("--test", choices=["ore", "lick", "size", "all"], default="all")
    _common_flags(p, ["json", "csv"])

    p = sub.add_parser("oracle", help="exact spanning-path queries")
    mode = p.add_subparsers(dest="mode", metavar="MODE")
    ph = mode.add_parser("hc", help="decide hamiltonian-connectedness of stdin graphs")
    ph.add_argument("--matrix", action="store_true",
                    help="include the full pair matrix in JSON output")
    _common_flags(ph, ["json", "csv"])

    p = sub.add_parser("verify", help="desk-scale verification sweeps")
    mode = p.add_subparsers(dest="mode", metavar="MODE")
    pe = mode.add_parser("exhaustive", help="size maximum by enumeration (n <= 8)")
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--delta", type=int, required=True)
    _common_flags(pe, ["json"])
    pq = mode.add_parser("cliques", help="clique maximum by full sweep (n <= 7)")
    pq.add_argument("--n", type=int, required=True)
    pq.add_argument("--delta", type=int, required=True)
    pq.add_argument("--s", type=int, required=True)
    _common_flags(pq, ["json"])
    ps = mode.add_parser("sample", help="randomized probe of the size threshold")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--delta", type=int, required=True)
    ps.add_argument("--trials", type=int, default=10_000)
    _common_flags(ps, ["json"])
    return top


def _read_graphs(stream) -> Iterable[Graph]:
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield decode_graph6(line)
        except Graph6ParseError as exc:
            raise _UsageError(f"stdin line {lineno}: {exc}") from exc


def _emit_graph(g: Graph, fmt: str, out) -> None:
    if fmt == "dot":
        out.write(export_dot(g) + "\n")
    else:
        out.write(encode_graph6(g) + "\n")


def _json(payload) -> str:
    if dataclasses.is_dataclass(payload) and not isinstance(payload, type):
        payload = dataclasses.asdict(payload)
    return json.dumps(payload, sort_keys=True)


def _cmd_construct(args, out, err) -> int:
    family = args.family.upper().replace("-", "_")
    g = build_classical(family, args.n, args.delta)
    _emit_graph(g, args.format, out)
    return EXIT_OK


def _cmd_cliques(args, out, err) -> int:
    if args.mode == "count":
        for idx, g in enumerate(_read_graphs(sys.stdin)):
            count = count_cliques(g, args.s)
            if args.format == "csv":
                if idx == 0:
                    out.write("graph,n,s,count\n")
                out.write(f"{encode_graph6(g)},{g.n},{args.s},{count}\n")
            else:
                out.write(_json({"graph": encode_graph6(g), "n": g.n,
                                 "s": args.s, "count": count}) + "\n")
        return EXIT_OK
    if args.mode == "formula":
        if args.which == "lambda":
            if args.x is None:
                raise _UsageError("lambda needs --x")
            value = lambda_s(args.n, args.x, args.s)
            params = {"n": args.n, "x": args.x, "s": args.s}
        else:
            if args.delta is None:
                raise _UsageError(f"{args.which} needs --delta")
            fn = f_s_formula if args.which == "f" else g_s_formula
            value = fn(args.n, args.delta, args.s)
            params = {"n": args.n, "delta": args.delta, "s": args.s}
        if args.format == "csv":
            keys = list(params) + ["which", "value"]
            out.write(",".join(keys) + "\n")
            out.write(",".join(str(v) for v in [*params.values(), args.which, value]) + "\n")
        else:
            out.write(_json({**params, "which": args.which, "value": value}) + "\n")
        return EXIT_OK
    raise _UsageError("cliques needs a mode: count or formula")


_TABLE_COLS = ["n", "delta", "f2", "g2", "phi", "regime", "families",
               "ho", "erdos", "zhang"]


def _optional_bound(kind: str, n: int, delta: int):
    try:
        return reference_bound(kind, n, delta).value
    except ParameterError:
        return None  # bound not defined at this (n, delta)


def _bounds_rows(lo: int, hi: int):
    for n in range(lo, hi + 1):
        for delta in range(3, n // 2 + 1):
            b = phi(n, delta)
            yield {
                "n": n,
                "delta": delta,
                "f2": f_s_formula(n, delta, 2),
                "g2": g_s_formula(n, delta, 2),
                "phi": b.value,
                "regime": b.regime,
                "families": "+".join(sorted(extremal_family(n, delta))),
                "ho": _optional_bound("HO", n, delta),
                "erdos": _optional_bound("ERDOS", n, delta),
                "zhang": _optional_bound("ZHANG", n, delta),
            }


def _cmd_bounds(args, out, err) -> int:
    if args.mode == "table":
        try:
            lo_s, hi_s = args.n_range.split(":")
            lo, hi = int(lo_s), int(hi_s)
        except ValueError as exc:
            raise _UsageError(f"--n-range wants A:B, got {args.n_range!r}") from exc
        if lo > hi or lo < 6:
            raise _UsageError(f"--n-range wants 6 <= A <= B, got {args.n_range!r}")
        rows = list(_bounds_rows(lo, hi))
        if args.format == "json":
            out.write(_json(rows) + "\n")
        else:
            out.write(",".join(_TABLE_COLS) + "\n")
            for r in rows:
                out.write(",".join("" if r[c] is None else str(r[c])
                                   for c in _TABLE_COLS) + "\n")
        return EXIT_OK
    if args.mode == "value":
        result = reference_bound(args.kind, args.n, delta=args.delta, s=args.s)
        payload = {"kind": args.kind.upper(), "n": args.n, "delta": args.delta,
                   "s": args.s, "value": result.value, "regime": result.regime}
        if args.format == "csv":
            out.write(",".join(payload) + "\n")
            out.write(",".join(str(v) for v in payload.values()) + "\n")
        else:
            out.write(_json(payload) + "\n")
        return EXIT_OK
    raise _UsageError("bounds needs a mode: table or value")


def _cmd_closure(args, out, err) -> int:
    for g in _read_graphs(sys.stdin):
        res = hc_closure(g, protected=args.protect)
        _emit_graph(res.graph, args.format, out)
        if res.added_edges:
            err.write(f"closure added {len(res.added_edges)} edges\n")
    return EXIT_OK


def _cmd_core(args, out, err) -> int:
    for g in _read_graphs(sys.stdin):
        trace = t_disintegration(g, args.t)
        _emit_graph(trace.core, args.format, out)
        if trace.deleted:
            err.write(f"deleted {len(trace.deleted)} vertices\n")
    return EXIT_OK


def _cmd_check(args, out, err) -> int:
    tests = {"ore": ore_test, "lick": lick_test, "size": size_test}
    selected = list(tests) if args.test == "all" else [args.test]
    worst = EXIT_OK
    for idx, g in enumerate(_read_graphs(sys.stdin)):
        row = {"graph": encode_graph6(g), "n": g.n}
        verdict = "inconclusive"
        for name in selected:
            v = tests[name](g)
            row[name] = v.outcome.name
            if v.outcome is not Outcome.INCONCLUSIVE and verdict == "inconclusive":
                verdict = "hc" if v.outcome is Outcome.HC_CERTIFIED else "nhc"
        row["verdict"] = verdict
        if verdict == "inconclusive":
            worst = EXIT_INCONCLUSIVE
        if args.format == "csv":
            if idx == 0:
                out.write(",".join(row) + "\n")
            out.write(",".join(str(v) for v in row.values()) + "\n")
        else:
            out.write(_json(row) + "\n")
    return worst


def _cmd_oracle(args, out, err) -> int:
    if args.mode != "hc":
        raise _UsageError("oracle needs a mode: hc")
    worst = EXIT_OK
    for idx, g in enumerate(_read_graphs(sys.stdin)):
        rep = hamiltonian_connected(g, matrix=args.matrix, dp_cap=args.dp_cap)
        if not rep.is_hc:
            worst = EXIT_FALSE
        row = {"graph": encode_graph6(g), "n": g.n, "hc": rep.is_hc,
               "failing_pair": list(rep.failing_pair) if rep.failing_pair else None}
        if args.matrix:
            row["pair_matrix"] = [[bool(x) for x in r] for r in rep.pair_matrix]
        if args.format == "csv":
            if idx == 0:
                out.write("graph,n,hc,failing_pair\n")
            fp = "" if rep.failing_pair is None else f"{rep.failing_pair[0]}:{rep.failing_pair[1]}"
            out.write(f"{encode_graph6(g)},{g.n},{rep.is_hc},{fp}\n")
        else:
            out.write(_json(row) + "\n")
    return worst


def _cmd_verify(args, out, err) -> int:
    if args.mode == "exhaustive":
        rep = exhaustive_extremal(args.n, args.delta, threads=args.threads)
        out.write(_json(rep) + "\n")
        err.write(f"observed {rep.observed_max}, predicted {rep.predicted}, "
                  f"{rep.maximizer_count} maximizers\n")
        return EXIT_OK if rep.matches_theorem else EXIT_FALSE
    if args.mode == "cliques":
        rep = exhaustive_clique_extremal(args.n, args.delta, args.s)
        out.write(_json(rep) + "\n")
        return EXIT_OK if rep.matches_prediction else EXIT_FALSE
    if args.mode == "sample":
        rep = sample_corollary1(args.n, args.delta, args.trials, args.seed)
        out.write(_json(rep) + "\n")
        err.write(f"{rep.trials} trials, {rep.rejections} rejections\n")
        return EXIT_OK if rep.counterexamples == 0 else EXIT_FALSE
    raise _UsageError("verify needs a mode: exhaustive, cliques, or sample")


_DISPATCH = {
    "construct": _cmd_construct,
    "cliques": _cmd_cliques,
    "bounds": _cmd_bounds,
    "closure": _cmd_closure,
    "core": _cmd_core,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.subcommand is None:
            raise _UsageError("missing subcommand; see --help")
        return _DISPATCH[args.subcommand](args, out, err)
    except _UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (ParameterError, CapacityError, Graph6ParseError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
