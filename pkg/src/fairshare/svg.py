"""SVG rendering of fairness lines with optional scatter overlays.

One panel per quintile, both axes spanning 0 to 1. Output is plain text
and deterministic, so tests can inspect it directly.
"""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .benchmark import FairnessBenchmark

PANEL_TITLES = (
    "(a) Lowest 20%",
    "(b) Second 20%",
    "(c) Third 20%",
    "(d) Fourth 20%",
    "(e) Top 20%",
)
SIZE = 240
MARGIN_LEFT = 56
MARGIN_TOP = 34
MARGIN_BOTTOM = 46
GAP = 28
TICKS = (0.0, 0.2, 0.4, 0.6, 0.8, 1.0)
STYLE = """
  .axis { stroke: #222; stroke-width: 1; fill: none; }
  .grid { stroke: #ddd; stroke-width: 0.5; }
  .line { stroke: #c0392b; stroke-width: 1.6; fill: none; }
  .sport { fill: #1f5fa8; stroke: none; }
  .country { fill: none; stroke: #2e8b57; stroke-width: 1; }
  text { font-family: sans-serif; font-size: 11px; fill: #222; }
  .title { font-size: 12px; font-weight: bold; }
"""


def _panel(out, q, ox, oy, curve_g, curve_y, sports, countries):
    def px(g):
        return ox + g * SIZE

    def py(v):
        return oy + (1.0 - v) * SIZE

    out.append(f'<g class="panel" id="panel-q{q}">')
    out.append(f'<text class="title" x="{ox:.1f}" y="{oy - 12:.1f}">{escape(PANEL_TITLES[q - 1])}</text>')
    for t in TICKS:
        out.append(f'<line class="grid" x1="{px(t):.2f}" y1="{py(0):.2f}" x2="{px(t):.2f}" y2="{py(1):.2f}"/>')
        out.append(f'<line class="grid" x1="{px(0):.2f}" y1="{py(t):.2f}" x2="{px(1):.2f}" y2="{py(t):.2f}"/>')
        out.append(f'<text x="{px(t):.2f}" y="{py(0) + 15:.2f}" text-anchor="middle">{t:.1f}</text>')
        out.append(f'<text x="{px(0) - 6:.2f}" y="{py(t) + 4:.2f}" text-anchor="end">{t:.1f}</text>')
    out.append(f'<rect class="axis" x="{ox:.2f}" y="{oy:.2f}" width="{SIZE}" height="{SIZE}"/>')
    out.append(f'<text class="xlabel" x="{px(0.5):.2f}" y="{py(0) + 32:.2f}" text-anchor="middle">Gini index</text>')
    out.append(f'<text class="ylabel" transform="translate({ox - 38:.2f},{py(0.5):.2f}) rotate(-90)" '
               f'text-anchor="middle">Share Q{q}</text>')
    pts = " ".join(f"{px(g):.2f},{py(v):.2f}" for g, v in zip(curve_g, curve_y))
    out.append(f'<polyline class="line" points="{pts}"/>')
    for cls, rows, r in (("sport", sports, 3.0), ("country", countries, 2.5)):
        for name, g, shares in rows:
            title = f"<title>{escape(name)}</title>" if name else ""
            out.append(f'<circle class="marker {cls}" cx="{px(g):.2f}" cy="{py(shares[q - 1]):.2f}" '
                       f'r="{r}">{title}</circle>')
    out.append("</g>")


def _rows(items):
    rows = []
    for item in items or ():
        if hasattr(item, "gini"):
            rows.append((getattr(item, "name", ""), float(item.gini), tuple(item.shares)))
        else:
            g, shares = item
            rows.append(("", float(g), tuple(shares)))
    return rows


def render_benchmark_svg(benchmark: FairnessBenchmark, sports=None, countries=None,
                         step: float = 0.001, title: str | None = None) -> str:
    """Five panels, each with its fairness line and any scatter points.

    ``sports`` and ``countries`` hold `CountryRecord`-like objects or
    ``(gini, shares)`` pairs. Sports draw as filled dots, countries as rings.
    """
    n = int(round(1.0 / step))
    g = np.linspace(0.0, 1.0, n + 1)
    values = benchmark.evaluate(g)
    sports, countries = _rows(sports), _rows(countries)

    width = MARGIN_LEFT + 5 * SIZE + 4 * (GAP + MARGIN_LEFT) + GAP
    height = MARGIN_TOP + SIZE + MARGIN_BOTTOM + (16 if title else 0)
    top = MARGIN_TOP + (16 if title else 0)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<style>{STYLE}</style>",
        f'<desc>{escape("fairness lines; provenance " + benchmark.provenance)}</desc>',
    ]
    if title:
        out.append(f'<text class="title" x="{MARGIN_LEFT}" y="16" data-role={quoteattr("figure-title")}>'
                   f"{escape(title)}</text>")
    for q in range(1, 6):
        ox = MARGIN_LEFT + (q - 1) * (SIZE + GAP + MARGIN_LEFT)
        _panel(out, q, ox, top, g, values[q - 1], sports, countries)
    out.append("</svg>")
    return "\n".join(out) + "\n"
