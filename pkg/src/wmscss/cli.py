"""Command-line entry point.

Exit codes: 0 success, 1 usage/parse error or refusal, 2 infeasible input.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import instances
from .arborescence import frederickson_best_root, frederickson_two_approx
from .errors import GraphFormatError, InfeasibleError, PreconditionError, SizeLimitError
from .exact import LIMITS, exact_opt
from .graph import Digraph, read_graph
from .lp import check_wmscss_feasible, parse_solution, solve_wmscss_lp
from .rational import format_decimal, format_rational
from .rounding import certify_bound, round_best_root, round_min_pair

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2

CSV_COLUMNS = ["instance", "n", "m", "lp", "f", "round_w", "bound", "fred_w", "opt", "ratio_round", "ratio_fred"]


class UsageError(Exception):
    pass


def _q(v: Fraction) -> str:
    return f"{format_rational(v)} ({format_decimal(v)})"


def _load(path: str) -> Digraph:
    try:
        return read_graph(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _exact_limit() -> int:
    raw = os.environ.get("WMSCSS_EXACT_MAX_ARCS")
    return int(raw) if raw else LIMITS.max_arcs_opt


def _root(g: Digraph, root: int) -> int:
    if not 0 <= root < g.n:
        raise UsageError(f"--root {root} is outside 0..{g.n - 1}")
    return root


def cmd_lp(args, out, err) -> int:
    g = _load(args.graph)
    outcome = solve_wmscss_lp(g)
    out.write(outcome.format())
    return EXIT_OK


def cmd_round(args, out, err) -> int:
    g = _load(args.graph)
    if args.x:
        try:
            x = parse_solution(g, Path(args.x).read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {args.x}: {exc.strerror}") from None
        except GraphFormatError as exc:
            raise UsageError(f"{args.x}: {exc}") from None
        cert = check_wmscss_feasible(g, x)
        if cert is not None:
            raise InfeasibleError("x violates a cut constraint", cert)
    else:
        x = solve_wmscss_lp(g).solution
    pad = not args.no_pad
    if args.sweep_roots:
        report, per_root = round_best_root(g, x, pad)
        for rep in per_root:
            out.write(f"sweep root {rep.root} solution_weight {format_rational(rep.solution_weight)}\n")
    else:
        report = round_min_pair(g, x, _root(g, args.root), pad)
    out.write(report.format())
    problem = certify_bound(report)
    out.write(f"certificate {'ok' if problem is None else 'FAILED: ' + problem}\n")
    if problem is not None and args.assert_bound:
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_approx2(args, out, err) -> int:
    g = _load(args.graph)
    res = frederickson_best_root(g) if args.sweep_roots else frederickson_two_approx(g, 0)
    out.write(f"root {res.root}\n")
    out.write(f"in_weight {_q(res.in_weight)}\n")
    out.write(f"out_weight {_q(res.out_weight)}\n")
    out.write(f"weight {_q(res.weight)}\n")
    out.write(("arcs " + " ".join(map(str, sorted(res.arcs)))).rstrip() + "\n")
    return EXIT_OK


def cmd_exact(args, out, err) -> int:
    g = _load(args.graph)
    arcs, weight = exact_opt(g, _exact_limit())
    out.write(f"opt {_q(weight)}\n")
    out.write(("arcs " + " ".join(map(str, sorted(arcs)))).rstrip() + "\n")
    return EXIT_OK


def _params(tokens: list[str]) -> dict[str, str]:
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise UsageError(f"parameter {tok!r} is not key=value")
        k, v = tok.split("=", 1)
        params[k] = v
    return params


def _int_param(params, key, default):
    try:
        return int(params.pop(key, default))
    except ValueError:
        raise UsageError(f"parameter {key} must be an integer") from None


def cmd_gen(args, out, err) -> int:
    params = _params(args.params)
    family = args.family
    meta = {"family": family, "seed": args.seed, "params": dict(params)}
    if family == "cycle":
        n = _int_param(params, "n", 3)
        w = params.pop("w", "1")
        items = [(f"cycle_n{n}", instances.gen_cycle(n, w), None)]
    elif family == "random":
        count = _int_param(params, "count", 10)
        lo_n, hi_n = _int_param(params, "n_min", 3), _int_param(params, "n_max", 8)
        m_max = _int_param(params, "m_max", 18)
        den = _int_param(params, "den", 1)
        wr = (params.pop("w_min", "1"), params.pop("w_max", "10"))
        graphs = instances.gen_random_corpus(count, (lo_n, hi_n), m_max, wr, args.seed, den)
        items = [(f"random_{k:04d}", g, None) for k, g in enumerate(graphs)]
    elif family == "half":
        count = _int_param(params, "count", 10)
        lo_n, hi_n = _int_param(params, "n_min", 3), _int_param(params, "n_max", 7)
        ones, zeros = _int_param(params, "ones", 1), _int_param(params, "zeros", 3)
        wr = (params.pop("w_min", "1"), params.pop("w_max", "10"))
        pairs = instances.gen_half_integral_corpus(count, (lo_n, hi_n), ones, zeros, wr, args.seed)
        items = [(f"half_{k:04d}", g, x) for k, (g, x) in enumerate(pairs)]
    else:
        raise UsageError(f"unknown family {family!r} (choose cycle, random, half)")
    if params:
        raise UsageError(f"unknown parameters for {family}: {', '.join(sorted(params))}")
    written = instances.write_corpus(args.output, items, meta)
    out.write(f"wrote {len(written)} instances to {args.output}\n")
    return EXIT_OK


def bench_row(name: str, g: Digraph, exact_limit: int, err=None) -> dict[str, str]:
    """One CSV row; the LP optimum is what gets rounded."""
    err = err or sys.stderr
    row = {c: "" for c in CSV_COLUMNS}
    row.update(instance=name, n=str(g.n), m=str(g.m))
    try:
        lp = solve_wmscss_lp(g)
    except InfeasibleError as exc:
        err.write(f"{name}: skipped, {exc}\n")
        return row
    rep = round_min_pair(g, lp.solution, 0)
    fred = frederickson_two_approx(g, 0)
    row.update(
        lp=format_rational(lp.objective),
        f=format_rational(rep.f) if rep.f is not None else "",
        round_w=format_rational(rep.solution_weight),
        bound=format_rational(rep.bound),
        fred_w=format_rational(fred.weight),
    )
    if g.m > exact_limit:
        err.write(f"{name}: opt skipped, {g.m} arcs exceeds exact limit {exact_limit}\n")
        return row
    _, opt = exact_opt(g, exact_limit)
    row["opt"] = format_rational(opt)
    if opt > 0:
        row["ratio_round"] = format_rational(rep.solution_weight / opt)
        row["ratio_fred"] = format_rational(fred.weight / opt)
    return row


def cmd_bench(args, out, err) -> int:
    directory = Path(args.directory)
    if not directory.is_dir():
        raise UsageError(f"{directory} is not a directory")
    try:
        corpus = instances.read_corpus(directory)
    except GraphFormatError as exc:
        raise UsageError(str(exc)) from None
    limit = _exact_limit()
    rows = [bench_row(name, g, limit, err) for name, g, _ in corpus]
    tmp = Path(str(args.output) + ".tmp")
    with open(tmp, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    os.replace(tmp, args.output)
    out.write(f"wrote {len(rows)} rows to {args.output}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wmscss", description="Exact LP rounding for strongly connected spanning subgraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lp", help="solve the cut LP exactly")
    s.add_argument("graph")
    s.set_defaults(func=cmd_lp)

    s = sub.add_parser("round", help="round an LP point by min-pair enumeration")
    s.add_argument("graph")
    s.add_argument("--x", help="solution file (default: LP optimum)")
    roots = s.add_mutually_exclusive_group()
    roots.add_argument("--root", type=int, default=0)
    roots.add_argument("--sweep-roots", action="store_true")
    s.add_argument("--no-pad", action="store_true", help="skip padding; parts are bare arborescences")
    s.add_argument("--assert-bound", action="store_true", help="exit non-zero if the bound certificate fails")
    s.set_defaults(func=cmd_round)

    s = sub.add_parser("approx2", help="in/out arborescence union baseline")
    s.add_argument("graph")
    s.add_argument("--sweep-roots", action="store_true")
    s.set_defaults(func=cmd_approx2)

    s = sub.add_parser("exact", help="exact optimum by branch and bound")
    s.add_argument("graph")
    s.set_defaults(func=cmd_exact)

    s = sub.add_parser("gen", help="write a generated corpus")
    s.add_argument("family", help="cycle | random | half")
    s.add_argument("params", nargs="*", help="key=value parameters")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="run every solver over a corpus directory")
    s.add_argument("directory")
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, SizeLimitError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InfeasibleError as exc:
        out.write("infeasible\n")
        if exc.cut is not None:
            out.write(f"witness {exc.cut.describe()}\n")
        err.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
