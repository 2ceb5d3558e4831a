"""Command-line front end.

Subcommands: gen, analyze, search, minimax, pathwidth, bounds,
crossing-bound, export, reproduce.  Exit codes: 0 success, 1 usage error,
2 invalid input data, 3 reproduction-suite failure.

Every subcommand is deterministic given its flags and input files; the
only randomness in the library (seeded drawing generation and the fixed
master seeds of the reproduction suite) is explicit, never ambient.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bounds as bnd
from . import export as exp
from . import families as fam
from . import reproduce as rep
from .core import (
    Drawing,
    Edge,
    brick_decomposition,
    crossing_profile,
    drawing_to_json,
    load_drawing,
    mutually_crossing_number,
)
from .decomposition import build_path_decomposition, decomposition_to_json, validate_decomposition
from .search import (
    MAX_DENSITY_N,
    BipartiteGraph,
    KPlanar,
    Quasiplanar,
    complete_bipartite,
    max_density,
    minimax_k,
)

__all__ = ["main", "entry", "AnalysisReport", "analyze_drawing"]


class _UsageError(Exception):
    pass


class _DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# analyze
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AnalysisReport:
    """Everything recomputable from a drawing alone: sizes, crossing
    statistics, bricks, the constructed pathwidth, and the verdicts of the
    crossing and quasiplanarity bounds."""

    p: int
    q: int
    n: int
    m: int
    total_crossings: int
    max_per_edge: int
    mutually_crossing: int
    planar_edges: tuple[Edge, ...]
    brick_count: int
    pathwidth_width: int
    cubic_bound: Fraction | None  # None when below the density threshold
    cubic_bound_holds: bool | None
    linear_bound_clamped: Fraction
    linear_bound_holds: bool
    quasiplanar_h: int
    quasiplanar_trivial: bool
    quasiplanar_holds: bool


def analyze_drawing(d: Drawing) -> AnalysisReport:
    prof = crossing_profile(d)
    mcn = mutually_crossing_number(d)
    bricks = brick_decomposition(d)
    pd = build_path_decomposition(d)
    cubic = bnd.crossing_lower_bound(d.n, d.m)
    linear = max(Fraction(0), bnd.auxiliary_lower_bound(d.n, d.m))
    k = prof.max_per_edge
    trivial = k < 2
    h = 3 if trivial else bnd.quasiplanar_threshold(k)
    return AnalysisReport(
        p=d.p,
        q=d.q,
        n=d.n,
        m=d.m,
        total_crossings=prof.total,
        max_per_edge=k,
        mutually_crossing=mcn,
        planar_edges=tuple(sorted(e for e, c in prof.per_edge.items() if c == 0)),
        brick_count=len(bricks.bricks),
        pathwidth_width=max(pd.width, 0),
        cubic_bound=cubic,
        cubic_bound_holds=None if cubic is None else Fraction(prof.total) >= cubic,
        linear_bound_clamped=linear,
        linear_bound_holds=Fraction(prof.total) >= linear,
        quasiplanar_h=h,
        quasiplanar_trivial=trivial,
        quasiplanar_holds=mcn <= h - 1,
    )


def _report_json(r: AnalysisReport) -> dict:
    return {
        "p": r.p,
        "q": r.q,
        "n": r.n,
        "m": r.m,
        "total_crossings": r.total_crossings,
        "max_per_edge": r.max_per_edge,
        "mutually_crossing": r.mutually_crossing,
        "planar_edges": [list(e) for e in r.planar_edges],
        "brick_count": r.brick_count,
        "pathwidth_width": r.pathwidth_width,
        "cubic_bound": None if r.cubic_bound is None else str(r.cubic_bound),
        "cubic_bound_holds": r.cubic_bound_holds,
        "linear_bound_clamped": str(r.linear_bound_clamped),
        "linear_bound_holds": r.linear_bound_holds,
        "quasiplanar_h": r.quasiplanar_h,
        "quasiplanar_trivial": r.quasiplanar_trivial,
        "quasiplanar_holds": r.quasiplanar_holds,
    }


def _report_text(r: AnalysisReport) -> str:
    lines = [
        f"layers: p={r.p}, q={r.q} (n={r.n}); edges: m={r.m}",
        f"crossings: total={r.total_crossings}, max per edge={r.max_per_edge}",
        f"mutually crossing edges: {r.mutually_crossing}",
        "planar edges: " + (", ".join(f"(u{i},v{x})" for i, x in r.planar_edges) or "none"),
        f"bricks: {r.brick_count}",
        f"path decomposition width: {r.pathwidth_width}",
    ]
    if r.cubic_bound is None:
        lines.append("cubic crossing bound: inapplicable (m below 125/48 n or n < 4)")
    else:
        verdict = "holds" if r.cubic_bound_holds else "VIOLATED"
        lines.append(f"cubic crossing bound: {r.cubic_bound} ({float(r.cubic_bound):.6g}) {verdict}")
    verdict = "holds" if r.linear_bound_holds else "VIOLATED"
    lines.append(
        f"linear crossing bound (clamped): {r.linear_bound_clamped} "
        f"({float(r.linear_bound_clamped):.6g}) {verdict}"
    )
    note = " (trivial for max per edge < 2)" if r.quasiplanar_trivial else ""
    verdict = "holds" if r.quasiplanar_holds else "VIOLATED"
    lines.append(f"quasiplanarity threshold h={r.quasiplanar_h}{note}: {verdict}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _load(path: str) -> Drawing:
    try:
        return load_drawing(path)
    except (OSError, ValueError) as exc:
        raise _DataError(str(exc)) from exc


def _write_or_print(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _default_threads() -> int:
    raw = os.environ.get("LAYERLENS_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_table(path: str | None) -> bnd.CoefficientTable:
    if path is None:
        return bnd.default_table()
    try:
        return bnd.load_table(path)
    except (OSError, ValueError) as exc:
        raise _DataError(str(exc)) from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        spec = fam.FamilySpec(family=args.family, size=args.size, k=args.k)
        drawing = fam.generate(spec)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    _write_or_print(json.dumps(drawing_to_json(drawing), indent=2), args.out)
    return 0


def _cmd_analyze(args: argparse.Namespace) -> int:
    d = _load(args.drawing)
    r = analyze_drawing(d)
    if args.json:
        print(json.dumps(_report_json(r), indent=2))
    else:
        print(_report_text(r))
    return 0


def _formula_note(kind: str, param: int, n: int, best: int) -> str:
    if kind == "k" and param <= 5:
        formula = bnd.small_k_density_bound(param, n)
    elif kind == "h" and param == 3 and n >= 3:
        formula = Fraction(2 * n - 4)
    else:
        return "no closed-form bound at this size"
    cap = formula.numerator // formula.denominator  # floor
    if best == cap:
        return f"matches the table bound floor({formula}) = {cap}"
    if best < cap:
        return f"below the table bound floor({formula}) = {cap} (bound not attained at this n)"
    return f"exceeds the table bound floor({formula}) = {cap} (exceptional graph)"


def _cmd_search(args: argparse.Namespace) -> int:
    if args.k is not None:
        constraint = KPlanar(args.k)
        kind, param = "k", args.k
        label = f"k={args.k}"
    else:
        constraint = Quasiplanar(args.quasi)
        kind, param = "h", args.quasi
        label = f"h={args.quasi}"
    threads = args.threads if args.threads else _default_threads()
    result = max_density(args.n, constraint, threads=threads)
    note = _formula_note(kind, param, args.n, result.best_m)
    print(f"n={args.n} {constraint.label}: best_m={result.best_m} ({note})")
    print(f"nodes={result.stats.nodes} millis={result.stats.millis:.1f} threads={threads}")
    if threads == 1:
        print("witness: first optimum in deterministic scan order")
    else:
        print("witness: any optimum (best_m itself is thread-count invariant)")
    if args.witness:
        _write_or_print(json.dumps(drawing_to_json(result.witness), indent=2), args.witness)
    if args.csv:
        row = f"{args.n},{label},{result.best_m},{result.stats.nodes},{result.stats.millis:.1f}"
        _write_or_print("n,constraint,best_m,nodes,millis\n" + row + "\n", args.csv)
    return 0


def _cmd_minimax(args: argparse.Namespace) -> int:
    if args.complete:
        a, b = args.complete
        if a < 1 or b < 1:
            raise _UsageError("part sizes must be positive")
        graph = complete_bipartite(a, b)
        name = f"K_{{{a},{b}}}"
    elif args.drawing:
        d = _load(args.drawing)
        graph = BipartiteGraph(d.p, d.q, d.edges)
        name = args.drawing
    else:
        raise _UsageError("provide a drawing file or --complete A B")
    try:
        value = minimax_k(graph)
    except ValueError as exc:
        raise _DataError(str(exc)) from exc
    print(f"minimax per-edge crossings of {name}: {value}")
    return 0


def _cmd_pathwidth(args: argparse.Namespace) -> int:
    d = _load(args.drawing)
    pd = build_path_decomposition(d)
    report = validate_decomposition(d, pd)
    print(f"bags={len(pd.bags)} width={pd.width} orientation={pd.orientation} valid={report.valid}")
    for prop, witness in report.violations:
        print(f"violated {prop}: {witness}")
    if args.out:
        _write_or_print(json.dumps(decomposition_to_json(pd), indent=2), args.out)
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    table = _load_table(args.table)
    k = args.k
    if k < 0:
        raise _UsageError("k must be non-negative")
    if k < table.t:
        coeff_a, coeff_b = table.alpha[k], table.beta[k]
        if args.n is not None:
            print(f"density upper bound (table row {k}): {coeff_a}*n - {coeff_b} = {coeff_a * args.n - coeff_b}")
        else:
            print(f"density upper bound (table row {k}): {coeff_a}*n - {coeff_b}")
        if k == 5:
            print("note: the 8-vertex, 14-edge exceptional drawing exceeds this row; all other sizes are tight")
    else:
        db = bnd.density_upper_bound(args.n if args.n is not None else 4, k, table)
        sqrt_part = f"{db.sqrt_coeff}*sqrt(k)" if db.sqrt_coeff is not None else f"sqrt({db.sqrt_coeff_sq}*k)"
        print(f"density upper bound: max({db.base_coeff}, {sqrt_part})*n = {db.coefficient_str()}*n")
        if args.n is not None:
            print(f"at n={args.n}: m <= {db.value():.6g}")
    if k >= 2:
        gl = bnd.density_lower_bound_general(k)
        print(f"band lower bound: offset ell={gl.ell}, m(p) = 2*(ell*p - ell*(ell+1)/2)")
        if args.n is not None and args.n // 2 > gl.ell:
            print(f"at n={args.n} (p={args.n // 2}): m = {gl.edge_count(args.n // 2)}")
        print(f"quasiplanarity threshold: h = {bnd.quasiplanar_threshold(k)}")
    else:
        print("band lower bound: needs k >= 2")
        print("quasiplanarity threshold: h = 3 (trivially, fewer than 2 crossings per edge)")
    return 0


def _cmd_crossing_bound(args: argparse.Namespace) -> int:
    table = _load_table(args.table)
    n, m = args.n, args.m
    if n < 1 or m < 0:
        raise _UsageError("n must be positive and m non-negative")
    cubic = bnd.crossing_lower_bound(n, m, table)
    threshold = bnd.density_threshold(table)
    if cubic is None:
        print(f"cubic bound: inapplicable (needs n >= 4 and m >= {threshold}*n = {float(threshold) * n:.6g})")
    else:
        print(f"cubic bound: cr >= {cubic} ({float(cubic):.6g}) [applicable]")
    linear = bnd.auxiliary_lower_bound(n, m, table)
    clamped = max(Fraction(0), linear)
    flag = "applicable" if n >= 4 else "nominal (n < 4)"
    print(f"linear bound: cr >= {linear} ({float(linear):.6g}), clamped {clamped} [{flag}]")
    return 0


def _cmd_export(args: argparse.Namespace) -> int:
    d = _load(args.drawing)
    if args.format == "dot":
        text = exp.to_dot(d)
    elif args.format == "svg":
        text = exp.to_svg(d)
    else:
        text = exp.to_csv(d)
    _write_or_print(text, args.out)
    return 0


def _cmd_reproduce(args: argparse.Namespace) -> int:
    threads = args.threads if args.threads else _default_threads()
    rows = rep.run_all(threads=threads)
    csv_text = rep.rows_to_csv(rows)
    sys.stdout.write(csv_text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(csv_text)
    if all(r.passed for r in rows):
        print(f"all {len(rows)} checks pass")
        return 0
    failed = sum(1 for r in rows if not r.passed)
    print(f"{failed} of {len(rows)} checks FAILED", file=sys.stderr)
    return 3


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="layerlens", description="Two-layer drawing toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a family drawing")
    p.add_argument("--family", required=True, choices=fam.FAMILY_NAMES)
    p.add_argument("--size", type=int, default=1, help="brick count or layer size")
    p.add_argument("--k", type=int, default=None, help="crossing cap (general_k only)")
    p.add_argument("--out", default=None, help="output drawing JSON (default stdout)")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("analyze", help="full crossing/brick/pathwidth/bounds report")
    p.add_argument("drawing", help="drawing JSON file")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("search", help="exact maximum density for small n")
    p.add_argument("--n", type=int, required=True, help=f"vertex count (2..{MAX_DENSITY_N})")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, default=None, help="k-planarity cap")
    group.add_argument("--quasi", type=int, default=None, help="quasiplanarity parameter h")
    p.add_argument("--threads", type=int, default=None, help="parallel split workers (default: LAYERLENS_THREADS or 1)")
    p.add_argument("--witness", default=None, help="write a witness drawing JSON here")
    p.add_argument("--csv", default=None, help="write an n,constraint,best_m,nodes,millis row here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("minimax", help="minimax per-edge crossings over all orderings")
    p.add_argument("drawing", nargs="?", default=None, help="drawing JSON, read as an abstract graph")
    p.add_argument("--complete", type=int, nargs=2, metavar=("A", "B"), help="use K_{A,B}")
    p.set_defaults(func=_cmd_minimax)

    p = sub.add_parser("pathwidth", help="build and validate the path decomposition")
    p.add_argument("drawing", help="drawing JSON file")
    p.add_argument("--out", default=None, help="write the decomposition JSON here")
    p.set_defaults(func=_cmd_pathwidth)

    p = sub.add_parser("bounds", help="density bounds and quasiplanarity threshold for a cap k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--table", default=None, help="coefficient table JSON")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("crossing-bound", help="crossing-number lower bounds for given n, m")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--table", default=None, help="coefficient table JSON")
    p.set_defaults(func=_cmd_crossing_bound)

    p = sub.add_parser("export", help="render a drawing as dot, svg, or csv")
    p.add_argument("drawing", help="drawing JSON file")
    p.add_argument("--format", required=True, choices=exp.EXPORT_FORMATS)
    p.add_argument("--out", default=None, help="output file (default stdout)")
    p.set_defaults(func=_cmd_export)

    p = sub.add_parser("reproduce", help="run the full verification suite, emit pass/fail CSV")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out", default=None, help="also write the CSV here")
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except _DataError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
