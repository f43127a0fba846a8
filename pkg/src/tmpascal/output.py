"""CSV and SVG emitters with deterministic, byte-stable output."""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import IO, Iterable, Sequence

from .dyadic import Dyadic
from .verify import ResidualRecord


def format_scalar(value) -> str:
    """Canonical string: plain integer, ``p/q`` Fraction, or dyadic form."""
    if isinstance(value, Dyadic):
        return str(value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else str(value)
    return str(value)


def parse_scalar(text: str):
    """Inverse of format_scalar for triangle CSV round trips."""
    if "/" in text:
        return Fraction(text)
    return int(text)


def _writer(stream: IO[str]) -> csv.writer:
    return csv.writer(stream, lineterminator="\n")


def write_triangle_csv(stream: IO[str], window: Iterable[tuple[int, int, object]]) -> None:
    out = _writer(stream)
    out.writerow(["k", "n", "value"])
    for k, n, value in window:
        out.writerow([k, n, format_scalar(value)])


def read_triangle_csv(stream: IO[str]) -> list[tuple[int, int, object]]:
    rows = csv.reader(stream)
    header = next(rows)
    if header != ["k", "n", "value"]:
        raise ValueError(f"unexpected triangle CSV header {header!r}")
    return [(int(k), int(n), parse_scalar(v)) for k, n, v in rows]


def write_samples_csv(
    stream: IO[str],
    samples: Sequence[tuple[Dyadic, Dyadic]],
    *,
    decimal: bool = False,
) -> None:
    out = _writer(stream)
    out.writerow(["x", "f", "decimal"] if decimal else ["x", "f"])
    for x, f in samples:
        row = [str(x), str(f)]
        if decimal:
            row.append(repr(float(f)))
        out.writerow(row)


def write_residual_csv(stream: IO[str], records: Sequence[ResidualRecord]) -> None:
    out = _writer(stream)
    out.writerow(["n", "X", "integral", "lhs", "rhs", "residual"])
    for r in records:
        out.writerow([r.level, str(r.x), str(r.integral), str(r.lhs), str(r.rhs), str(r.residual)])


def write_probe_csv(stream: IO[str], profile: Sequence[tuple[int, object]]) -> None:
    out = _writer(stream)
    out.writerow(["k", "running_max"])
    for k, peak in profile:
        out.writerow([k, format_scalar(peak)])


_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(v: float) -> str:
    return f"{v + 0.0 if v else 0.0:.10g}"


def render_svg(series: Sequence[tuple[str, Sequence[tuple[float, float]]]]) -> str:
    """One SVG document with a polyline per series, y axis pointing up.

    Coordinates are emitted in data space (y negated so larger values plot
    higher); the viewBox is derived from the data with a small margin.
    """
    points = [p for _, pts in series for p in pts]
    if not points:
        raise ValueError("nothing to plot")
    xs = [p[0] for p in points]
    ys = [-p[1] for p in points]
    pad_x = (max(xs) - min(xs)) * 0.05 or 0.5
    pad_y = (max(ys) - min(ys)) * 0.05 or 0.5
    x0, y0 = min(xs) - pad_x, min(ys) - pad_y
    width = max(xs) - min(xs) + 2 * pad_x
    height = max(ys) - min(ys) + 2 * pad_y
    stroke = _fmt(max(width, height) / 250)
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}" '
        'width="640" height="400" preserveAspectRatio="xMidYMid meet">'
    ]
    for i, (label, pts) in enumerate(series):
        coords = " ".join(f"{_fmt(x)},{_fmt(-y)}" for x, y in pts)
        color = _PALETTE[i % len(_PALETTE)]
        parts.append(
            f'<polyline data-label="{label}" fill="none" stroke="{color}" '
            f'stroke-width="{stroke}" points="{coords}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
