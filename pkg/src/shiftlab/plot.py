"""Dependency-free SVG line charts of sweep CSV files."""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from xml.sax.saxutils import escape, quoteattr

from .errors import ShiftLabError

__all__ = ["PlotError", "PlotSpec", "load_series", "render_svg", "plot_csv"]

PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#ff7f0e",
    "#9467bd",
    "#8c564b",
    "#e377c2",
    "#17becf",
)

# columns that, when they vary across rows, split the data into series
_SERIES_COLUMNS = ("model", "n", "shift_kind", "weights", "signed_mode")


class PlotError(ShiftLabError):
    pass


@dataclass(frozen=True)
class PlotSpec:
    csv_path: str | os.PathLike
    output: str | os.PathLike | None = None
    x: str = "param_value"
    y: str = "p_hat"
    band: tuple[str, str] | None = ("ci_low", "ci_high")
    group: str | None = None
    title: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None


def load_series(spec: PlotSpec) -> dict[str, list[tuple[float, ...]]]:
    """Read the CSV and split it into labelled, x-sorted series."""
    with open(spec.csv_path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        rows = list(reader)
    needed = [spec.x, spec.y] + list(spec.band or ()) + ([spec.group] if spec.group else [])
    missing = [c for c in needed if c not in header]
    if missing:
        raise PlotError(f"missing column(s) in {spec.csv_path}: {', '.join(missing)}")
    if not rows:
        raise PlotError("no data rows")

    if spec.group:
        keys = [spec.group]
    else:
        keys = [c for c in _SERIES_COLUMNS if c in header and len({r[c] for r in rows}) > 1]

    series: dict[str, list[tuple[float, ...]]] = {}
    for lineno, r in enumerate(rows, start=2):
        if keys:
            label = ", ".join(f"{k}={r[k]}" for k in keys) if len(keys) > 1 else r[keys[0]]
        else:
            label = spec.y
        try:
            point = [float(r[spec.x]), float(r[spec.y])]
            if spec.band:
                point += [float(r[spec.band[0]]), float(r[spec.band[1]])]
        except (TypeError, ValueError):
            raise PlotError(f"non-numeric value on CSV line {lineno}") from None
        series.setdefault(label, []).append(tuple(point))
    for pts in series.values():
        pts.sort()
    return series


def _nice_ticks(lo, hi, target=6):
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = next(m * mag for m in (1, 2, 2.5, 5, 10) if m * mag >= raw)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    t = first
    while t <= hi + 1e-9 * step:
        ticks.append(round(t, 12))
        t += step
    return ticks


def _label(v):
    return f"{v:.6g}"


def render_svg(series, title="", xlabel="", ylabel="", width=640, height=420) -> str:
    """SVG document with one polyline per series and optional CI bands.

    Points are ``(x, y)`` or ``(x, y, low, high)`` tuples.
    """
    if not series or not any(series.values()):
        raise PlotError("no data rows")
    left, right, top, bottom = 64, 20, 40 if title else 20, 52
    pw, ph = width - left - right, height - top - bottom

    xs = [p[0] for pts in series.values() for p in pts]
    ys = [v for pts in series.values() for p in pts for v in p[1:]]
    x0, x1 = min(xs), max(xs)
    if x0 == x1:
        x0, x1 = x0 - 0.5, x1 + 0.5
    if min(ys) >= 0.0 and max(ys) <= 1.0:
        y0, y1 = 0.0, 1.0
    else:
        y0, y1 = min(ys), max(ys)
        if y0 == y1:
            y0, y1 = y0 - 0.5, y1 + 0.5

    def sx(x):
        return left + (x - x0) / (x1 - x0) * pw

    def sy(y):
        return top + (1.0 - (y - y0) / (y1 - y0)) * ph

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(
            f'<text x="{width / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>'
        )

    out.append('<g class="grid" stroke="#dddddd" stroke-width="1">')
    xticks = [t for t in _nice_ticks(x0, x1) if x0 - 1e-12 <= t <= x1 + 1e-12]
    yticks = [t for t in _nice_ticks(y0, y1, 5) if y0 - 1e-12 <= t <= y1 + 1e-12]
    for t in xticks:
        out.append(f'<line x1="{sx(t):.2f}" y1="{top}" x2="{sx(t):.2f}" y2="{top + ph}"/>')
    for t in yticks:
        out.append(f'<line x1="{left}" y1="{sy(t):.2f}" x2="{left + pw}" y2="{sy(t):.2f}"/>')
    out.append("</g>")

    for i, (label, pts) in enumerate(series.items()):
        color = PALETTE[i % len(PALETTE)]
        if pts and len(pts[0]) == 4:
            upper = " ".join(f"{sx(p[0]):.2f},{sy(p[3]):.2f}" for p in pts)
            lower = " ".join(f"{sx(p[0]):.2f},{sy(p[2]):.2f}" for p in reversed(pts))
            out.append(
                f'<polygon class="ci-band" points="{upper} {lower}" fill="{color}" '
                f'fill-opacity="0.18" stroke="none"/>'
            )
        line = " ".join(f"{sx(p[0]):.2f},{sy(p[1]):.2f}" for p in pts)
        out.append(
            f'<polyline class="series" data-label={quoteattr(label)} points="{line}" '
            f'fill="none" stroke="{color}" stroke-width="1.8"/>'
        )

    out.append(
        f'<rect x="{left}" y="{top}" width="{pw}" height="{ph}" fill="none" stroke="black"/>'
    )
    for t in xticks:
        out.append(
            f'<text x="{sx(t):.2f}" y="{top + ph + 16}" text-anchor="middle">{_label(t)}</text>'
        )
    for t in yticks:
        out.append(
            f'<text x="{left - 6}" y="{sy(t) + 4:.2f}" text-anchor="end">{_label(t)}</text>'
        )
    if xlabel:
        out.append(
            f'<text x="{left + pw / 2:.1f}" y="{height - 12}" text-anchor="middle">{escape(xlabel)}</text>'
        )
    if ylabel:
        cy = top + ph / 2
        out.append(
            f'<text x="16" y="{cy:.1f}" text-anchor="middle" '
            f'transform="rotate(-90 16 {cy:.1f})">{escape(ylabel)}</text>'
        )

    out.append('<g class="legend">')
    for i, label in enumerate(series):
        color = PALETTE[i % len(PALETTE)]
        y = top + 14 + 18 * i
        out.append(
            f'<line x1="{left + pw - 150}" y1="{y - 4}" x2="{left + pw - 126}" y2="{y - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(f'<text class="legend-entry" x="{left + pw - 120}" y="{y}">{escape(label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def plot_csv(spec: PlotSpec) -> str:
    """Render ``spec.csv_path``; writes ``spec.output`` when set and returns the SVG."""
    series = load_series(spec)
    svg = render_svg(
        series,
        title=spec.title or "",
        xlabel=spec.xlabel if spec.xlabel is not None else spec.x,
        ylabel=spec.ylabel if spec.ylabel is not None else spec.y,
    )
    if spec.output is not None:
        with open(spec.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    return svg
