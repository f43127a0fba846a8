"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 verification failure (or a
corrupt cache, which is never silently healed), 2 usage or parse error,
3 memory-budget exhaustion.
"""

from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import verify as verify_mod
from .approximant import PiecewiseLinearApproximant
from .cache import RowCache
from .dyadic import Dyadic
from .errors import CacheIntegrityError, ResourceBudgetError
from .output import (
    render_svg,
    write_probe_csv,
    write_residual_csv,
    write_samples_csv,
    write_triangle_csv,
)
from .triangle import (
    DEFAULT_CELL_BUDGET,
    boundedness_probe,
    build_triangle,
    check_bounds_and_symmetry,
    check_factorization,
    check_growth,
    coefficient_row,
    parity_init,
    sturmian_init,
)

SUITES = ("lemma1", "bounds", "growth", "lemma5", "theorem", "residual", "operator")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tmpascal",
        description="Exact parity-sign recurrence tables, interpolants, and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--cache-dir", help="row cache directory (env TMP_CACHE_DIR)")
        p.add_argument("--mem-budget-mb", type=int, help="approximate memory budget")

    p = sub.add_parser("triangle", help="emit a table window as CSV")
    p.add_argument("--k-max", type=int, required=True)
    p.add_argument("--n", type=int, required=True, help="maximum depth")
    p.add_argument("--alpha", help="Sturmian seed p/q instead of parity signs")
    common(p)

    p = sub.add_parser("coeffs", help="emit one coefficient row")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("from_recurrence", "from_table"), default="from_recurrence")
    common(p)

    p = sub.add_parser("eval", help="evaluate one interpolant exactly")
    p.add_argument("--n", type=int, required=True, help="level")
    p.add_argument("--x", help="dyadic point, e.g. 1/2 or 3/2^4")
    p.add_argument("--interval", help="a:b to emit a sample CSV over the grid instead")
    p.add_argument("--decimal", action="store_true", help="add a float column to the CSV")
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--n", type=int, help="depth or level (residual: max level)")
    p.add_argument("--k-max", type=int, help="block count / iteration count")
    p.add_argument("--m-max", type=int, default=16)
    p.add_argument("--x", action="append", help="residual point(s), repeatable or comma-separated")
    common(p)

    p = sub.add_parser("sturmian", help="boundedness probe of a Sturmian-seeded column")
    p.add_argument("--alpha", required=True, help="slope p/q in [0,1]")
    p.add_argument("--n", type=int, default=2, help="depth to probe")
    p.add_argument("--k-max", type=int, default=4096)
    common(p)

    p = sub.add_parser("plot", help="render interpolant levels as SVG polylines")
    p.add_argument("--levels", required=True, help="comma-separated levels, e.g. 4,6,12")
    p.add_argument("--interval", default="0:4", help="a:b with dyadic endpoints")
    common(p)

    return parser


@contextmanager
def _open_out(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as handle:
            yield handle


def _budget(args) -> int:
    if args.mem_budget_mb is None:
        return DEFAULT_CELL_BUDGET
    if args.mem_budget_mb <= 0:
        raise ValueError("--mem-budget-mb must be positive")
    # ~32 bytes per small-int cell is a workable planning figure.
    return max(args.mem_budget_mb * (1 << 20) // 32, 1)


def _cache(args) -> RowCache | None:
    directory = args.cache_dir or os.environ.get("TMP_CACHE_DIR")
    return RowCache(directory) if directory else None


def _alpha(text: str) -> Fraction:
    alpha = Fraction(text)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def _points(args) -> list[Dyadic]:
    raw = args.x or ["1", "3/2", "7/4", "3"]
    flat: list[str] = []
    for chunk in raw:
        flat.extend(part for part in chunk.split(",") if part)
    return [Dyadic.parse(part) for part in flat]


def _run_triangle(args) -> int:
    init = sturmian_init(_alpha(args.alpha)) if args.alpha else parity_init()
    table = build_triangle(init, args.k_max, args.n, max_cells=_budget(args))
    with _open_out(args.out) as handle:
        write_triangle_csv(handle, table.window(0, args.k_max, 0, args.n))
    return 0


def _run_coeffs(args) -> int:
    row = coefficient_row(args.n, args.method, cache=_cache(args), max_len=_budget(args))
    with _open_out(args.out) as handle:
        handle.write(",".join(str(v) for v in row.values) + "\n")
    return 0


def _run_eval(args) -> int:
    if (args.x is None) == (args.interval is None):
        raise ValueError("give exactly one of --x or --interval")
    if args.x is not None:
        x = Dyadic.parse(args.x)
        value = PiecewiseLinearApproximant.build(
            args.n, x_max=x, cache=_cache(args), max_cells=_budget(args)
        ).eval(x)
        with _open_out(args.out) as handle:
            handle.write(str(value) + "\n")
        return 0
    lo, hi = _parse_interval(args.interval)
    approx = None
    if hi > 0:
        approx = PiecewiseLinearApproximant.build(
            args.n, x_max=hi, cache=_cache(args), max_cells=_budget(args)
        )
    samples = []
    for x in _grid_points(args.n, lo, hi):
        value = approx.eval(x) if (approx is not None and x > 0) else Dyadic(0)
        samples.append((x, value))
    with _open_out(args.out) as handle:
        write_samples_csv(handle, samples, decimal=args.decimal)
    return 0


def _run_verify(args) -> int:
    cache = _cache(args)
    budget = _budget(args)
    suite = args.suite
    if suite == "lemma1":
        n = args.n if args.n is not None else 6
        blocks = args.k_max if args.k_max is not None else 16
        report = check_factorization(n, blocks, cache=cache, max_cells=budget)
    elif suite == "bounds":
        report = check_bounds_and_symmetry(args.n if args.n is not None else 8, max_len=budget)
    elif suite == "growth":
        report = check_growth(args.n if args.n is not None else 8, max_len=budget)
    elif suite == "lemma5":
        report = verify_mod.interpolant_property_suite(
            args.n if args.n is not None else 6, args.m_max, cache=cache, max_cells=budget
        )
    elif suite == "theorem":
        report = verify_mod.integer_value_suite(
            args.m_max, args.n if args.n is not None else 6, cache=cache, max_cells=budget
        )
    elif suite == "residual":
        top = args.n if args.n is not None else 8
        report = verify_mod.residual_suite(4, top, _points(args), cache=cache, max_cells=budget)
        if args.out:
            records = verify_mod.residual_scan(4, top, _points(args), cache=cache, max_cells=budget)
            with open(args.out, "w", newline="") as handle:
                write_residual_csv(handle, records)
    else:
        report = verify_mod.operator_match_suite(
            args.k_max if args.k_max is not None else 256,
            args.n if args.n is not None else 12,
        )
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _run_sturmian(args) -> int:
    profile = boundedness_probe(
        sturmian_init(_alpha(args.alpha)), args.n, args.k_max, max_cells=_budget(args)
    )
    with _open_out(args.out) as handle:
        write_probe_csv(handle, profile)
    return 0


def _parse_interval(text: str) -> tuple[Dyadic, Dyadic]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"interval must look like a:b, got {text!r}")
    lo, hi = Dyadic.parse(lo), Dyadic.parse(hi)
    if not lo < hi:
        raise ValueError(f"empty interval {text!r}")
    return lo, hi


def _run_plot(args) -> int:
    try:
        levels = [int(part) for part in args.levels.split(",") if part]
    except ValueError:
        raise ValueError(f"bad --levels {args.levels!r}") from None
    if not levels or any(lv < 1 for lv in levels):
        raise ValueError("levels must be integers >= 1")
    lo, hi = _parse_interval(args.interval)
    cache = _cache(args)
    budget = _budget(args)
    series = []
    for level in levels:
        approx = None
        if hi > 0:
            approx = PiecewiseLinearApproximant.build(
                level, x_max=hi, cache=cache, max_cells=budget
            )
        samples = []
        for x in _grid_points(level, lo, hi):
            value = approx.eval(x) if (approx is not None and x > 0) else Dyadic(0)
            samples.append((float(x), float(value)))
        series.append((f"level {level}", samples))
    document = render_svg(series)
    with _open_out(args.out) as handle:
        handle.write(document)
    return 0


def _grid_points(level: int, lo: Dyadic, hi: Dyadic) -> list[Dyadic]:
    first = lo.floor_times_pow2(level - 1)
    last = hi.floor_times_pow2(level - 1)
    points = [lo]
    for k in range(first + 1, last + 1):
        x = Dyadic(k, level - 1)
        if lo < x < hi:
            points.append(x)
    points.append(hi)
    return points


_RUNNERS = {
    "triangle": _run_triangle,
    "coeffs": _run_coeffs,
    "eval": _run_eval,
    "verify": _run_verify,
    "sturmian": _run_sturmian,
    "plot": _run_plot,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return _RUNNERS[args.command](args)
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except CacheIntegrityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc.strerror or exc} ({getattr(exc, 'filename', None)})", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
