"""Quantile binning and choropleth rendering (CSV and standalone SVG).

Shading follows one rule everywhere: the darker the state, the higher the
value. Bin indexes are non-decreasing in value, equal values always share
a bin, and null values get a null bin rendered as "no data".
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

from .analytics import CityDot, ProportionVector
from .errors import NoDataError
from .geometry import CELL, GAP, grid_size, tile_origin
from .states import STATES

DEFAULT_BINS = 7


@dataclass(frozen=True)
class Legend:
    min: float
    max: float
    bins: int


@dataclass(frozen=True)
class ChoroplethSpec:
    values: tuple[float | None, ...]
    denominator: tuple[int, ...] | None
    bins: tuple[int | None, ...]
    bin_edges: tuple[float, ...]
    legend: Legend


def _quantile(sorted_values: list[float], q: float) -> float:
    """Linear-interpolation quantile of an ascending list."""
    pos = q * (len(sorted_values) - 1)
    f = math.floor(pos)
    g = pos - f
    if g == 0:
        return sorted_values[f]
    return sorted_values[f] + (sorted_values[f + 1] - sorted_values[f]) * g


def bin_quantile(
    vector: ProportionVector | Sequence[float | int | None],
    bins: int = DEFAULT_BINS,
) -> ChoroplethSpec:
    """Assign quantile bins to a 50-state vector.

    Bin edges are the 1/B .. (B-1)/B quantiles of the non-null values;
    duplicate edges collapse, and an edge at the maximum would separate
    nothing, so degenerate distributions produce fewer, wider bins
    (all-equal values land in a single bin 0). A value's bin is the number
    of distinct edges strictly below it, which makes binning monotone in
    the value.
    """
    if bins < 2:
        raise ValueError("bins must be >= 2")
    denominator: tuple[int, ...] | None = None
    if isinstance(vector, ProportionVector):
        values: tuple[float | None, ...] = vector.values
        denominator = vector.denominator
    else:
        values = tuple(None if v is None else float(v) for v in vector)

    non_null = sorted(v for v in values if v is not None)
    if not non_null:
        raise NoDataError("vector has no non-null values")

    edges: list[float] = []
    for k in range(1, bins):
        e = _quantile(non_null, k / bins)
        if e < non_null[-1] and (not edges or e != edges[-1]):
            edges.append(e)

    assigned = tuple(
        None if v is None else bisect_left(edges, v) for v in values
    )
    legend = Legend(min=non_null[0], max=non_null[-1], bins=len(edges) + 1)
    return ChoroplethSpec(
        values=values,
        denominator=denominator,
        bins=assigned,
        bin_edges=tuple(edges),
        legend=legend,
    )


# ----------------------------------------------------------------------------
# Exports

def _fmt(v: float) -> str:
    return format(v, ".6g")


def to_csv(spec: ChoroplethSpec) -> str:
    """``usps,value,bin`` rows; null states leave both fields empty."""
    lines = ["usps,value,bin"]
    for s in STATES:
        v = spec.values[s.index]
        b = spec.bins[s.index]
        lines.append(f"{s.usps},{'' if v is None else repr(v)},{'' if b is None else b}")
    return "\n".join(lines) + "\n"


def _ramp(n: int) -> list[str]:
    """Single-hue sequential ramp, light to dark, n steps."""
    light = (0xEB, 0xF3, 0xFB)
    dark = (0x08, 0x30, 0x6B)
    if n == 1:
        return ["#%02x%02x%02x" % dark]
    colors = []
    for i in range(n):
        t = i / (n - 1)
        rgb = tuple(round(a + (b - a) * t) for a, b in zip(light, dark))
        colors.append("#%02x%02x%02x" % rgb)
    return colors


def to_svg(
    spec: ChoroplethSpec,
    title: str | None = None,
    city_dots: Sequence[CityDot] = (),
) -> str:
    """Standalone SVG choropleth over the embedded tile grid.

    Each state tile carries fill class ``q<bin>`` (or ``qnull``), so the
    SVG encodes exactly the bin assignment of the JSON payload. A legend
    with the bin edges is embedded below the map.
    """
    cell, gap = CELL, GAP
    grid_w, grid_h = grid_size(cell, gap)
    margin = 16
    title_h = 34 if title else 0
    legend_h = 58
    width = grid_w + 2 * margin
    height = grid_h + 2 * margin + title_h + legend_h

    n_bins = spec.legend.bins
    colors = _ramp(n_bins)
    out: list[str] = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    style = ["text{font-family:sans-serif}"]
    for i, color in enumerate(colors):
        style.append(f".q{i}{{fill:{color}}}")
    style.append(".qnull{fill:url(#nodata)}")
    out.append("<style>" + "".join(style) + "</style>")
    out.append(
        '<defs><pattern id="nodata" width="6" height="6" patternUnits="userSpaceOnUse">'
        '<rect width="6" height="6" fill="#f0f0f0"/>'
        '<path d="M0,6 L6,0" stroke="#c0c0c0" stroke-width="1"/></pattern></defs>'
    )
    out.append(f'<rect width="{width}" height="{height}" fill="#ffffff"/>')
    if title:
        out.append(
            f'<text x="{width / 2:g}" y="{margin + 8}" text-anchor="middle" '
            f'font-size="16">{escape(title)}</text>'
        )

    ox, oy = margin, margin + title_h
    for s in STATES:
        x, y = tile_origin(s.usps, cell, gap)
        b = spec.bins[s.index]
        cls = "qnull" if b is None else f"q{b}"
        v = spec.values[s.index]
        label = "no data" if v is None else _fmt(v)
        out.append(
            f'<rect class="{cls}" data-state="{s.usps}" x="{ox + x}" y="{oy + y}" '
            f'width="{cell}" height="{cell}" stroke="#ffffff" stroke-width="1">'
            f"<title>{escape(s.name)}: {label}</title></rect>"
        )
        # Keep the label readable on dark tiles.
        dark = b is not None and n_bins > 1 and b >= n_bins / 2
        fill = "#ffffff" if dark else "#333333"
        out.append(
            f'<text x="{ox + x + cell / 2:g}" y="{oy + y + cell / 2 + 4:g}" '
            f'text-anchor="middle" font-size="13" fill="{fill}">{s.usps}</text>'
        )

    if city_dots:
        top = max(d.count for d in city_dots)
        for d in city_dots:
            x, y = tile_origin(d.state.usps, cell, gap)
            r = 3 + 7 * math.sqrt(d.count / top)
            out.append(
                f'<circle class="city" cx="{ox + x + cell / 2:g}" cy="{oy + y + cell / 2:g}" '
                f'r="{r:.2f}" fill="#d95f0e" fill-opacity="0.75">'
                f"<title>{escape(d.city)}, {d.state.usps}: {d.count}</title></circle>"
            )

    # Legend: one swatch per bin, edge values between them.
    ly = oy + grid_h + 18
    sw, sh = 46, 14
    lx = margin
    for i in range(n_bins):
        out.append(
            f'<rect class="q{i}" x="{lx + i * sw}" y="{ly}" width="{sw}" height="{sh}" '
            f'stroke="#999999" stroke-width="0.5"/>'
        )
    labels = [spec.legend.min, *spec.bin_edges, spec.legend.max]
    for i, v in enumerate(labels):
        out.append(
            f'<text x="{lx + i * sw:g}" y="{ly + sh + 14}" font-size="10" '
            f'text-anchor="middle">{_fmt(v)}</text>'
        )
    out.append(
        f'<text x="{lx}" y="{ly - 6}" font-size="11" fill="#555555">'
        "darker = higher</text>"
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
