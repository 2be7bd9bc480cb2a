"""JSON figure/curve files, tolerance config, SVG and CSV output.

Figure file::

    {"type": "polygon", "vertices": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]}

Curve file::

    {"vertices": [[0.0, 0.0], [1.0, 0.0]]}

A file is canonical when it is exactly what :func:`dump_figure` or
:func:`dump_curve` writes; canonical files survive a parse/dump round trip
byte for byte.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import Iterable
from xml.sax.saxutils import escape

from .curves import Curve, hull_of_curve
from .errors import InvalidInput
from .geometry import DEFAULT_TOLERANCES, ConvexFigure, FigureKind, Point, Tolerances, convex_hull
from .theorems import CaseRecord


class FileFormatError(InvalidInput):
    """A figure or curve file that cannot be parsed.

    ``index`` is the position of the offending vertex when there is one.
    """

    def __init__(self, message: str, index: int | None = None):
        self.index = index
        if index is not None:
            message = f"vertex {index}: {message}"
        super().__init__(message)


def _load_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FileFormatError("top level must be a JSON object")
    return data


def _vertices(data: dict) -> list[Point]:
    raw = data.get("vertices")
    if not isinstance(raw, list):
        raise FileFormatError('"vertices" must be a list of [x, y] pairs')
    pts = []
    for i, v in enumerate(raw):
        if (
            not isinstance(v, list)
            or len(v) != 2
            or not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v)
            or not all(math.isfinite(c) for c in v)
        ):
            raise FileFormatError(f"expected a pair of finite numbers, got {v!r}", i)
        pts.append(Point(*v))
    return pts


def parse_figure(text: str, eps: float = DEFAULT_TOLERANCES.eps_geom) -> ConvexFigure:
    """Parse a figure file; vertices may come in any rotation or orientation."""
    data = _load_json(text)
    kind = data.get("type")
    if kind not in {k.value for k in FigureKind}:
        raise FileFormatError(f'"type" must be one of point, segment, polygon, got {kind!r}')
    pts = _vertices(data)
    if not pts:
        raise FileFormatError("a figure needs at least one vertex")
    K = convex_hull(pts, eps)
    for i, p in enumerate(pts):
        if p not in K.vertices:
            raise FileFormatError("not an extreme point of the figure", i)
        if p in pts[:i]:
            raise FileFormatError("repeated vertex", i)
    if K.kind.value != kind:
        raise FileFormatError(f"vertices describe a {K.kind.value}, not a {kind}")
    return K


def parse_curve(text: str) -> Curve:
    pts = _vertices(_load_json(text))
    if len(pts) < 2:
        raise FileFormatError("a curve needs at least two vertices")
    return Curve(tuple(pts))


def dump_figure(K: ConvexFigure) -> str:
    return json.dumps({"type": K.kind.value, "vertices": [list(v) for v in K.vertices]}) + "\n"


def dump_curve(c: Curve) -> str:
    return json.dumps({"vertices": [list(v) for v in c.vertices]}) + "\n"


def load_figure(path) -> ConvexFigure:
    return parse_figure(Path(path).read_text())


def load_curve(path) -> Curve:
    return parse_curve(Path(path).read_text())


def save_figure(path, K: ConvexFigure) -> None:
    Path(path).write_text(dump_figure(K))


def save_curve(path, c: Curve) -> None:
    Path(path).write_text(dump_curve(c))


def load_config(path) -> tuple[Tolerances, dict]:
    """Read a JSON config with optional ``tolerances`` and ``optimizer`` sections."""
    data = _load_json(Path(path).read_text())
    try:
        tol = Tolerances(**data.get("tolerances", {}))
    except TypeError as exc:
        raise FileFormatError(f"bad tolerances section: {exc}") from None
    return tol, dict(data.get("optimizer", {}))


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

def _fmt(v: float) -> str:
    return f"{v:.6g}"


def _points_attr(pts) -> str:
    # SVG's y axis points down; flip so figures appear as in the plane.
    return " ".join(f"{_fmt(x)},{_fmt(0.0 - y)}" for x, y in pts)


def render_svg(
    K: ConvexFigure, curves: Iterable[Curve] = (), title: str | None = None, size: int = 480
) -> str:
    """SVG drawing: figure filled, each curve stroked, its hull dashed, its chord dotted."""
    curves = list(curves)
    pts = list(K.vertices) + [v for c in curves for v in c.vertices]
    xs = [p.x for p in pts]
    ys = [0.0 - p.y for p in pts]
    w = max(max(xs) - min(xs), 1e-9)
    h = max(max(ys) - min(ys), 1e-9)
    span = max(w, h)
    margin = 0.05 * span
    x0, y0 = min(xs) - margin, min(ys) - margin
    vw, vh = w + 2 * margin, h + 2 * margin
    stroke = _fmt(span / 250)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(vw)} {_fmt(vh)}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(
        f'<g class="figure"><polygon points="{_points_attr(K.vertices)}" '
        f'fill="#cfe3f5" stroke="#3b6c99" stroke-width="{stroke}"/></g>'
    )
    palette = ["#c0392b", "#27ae60", "#8e44ad", "#d35400"]
    for k, c in enumerate(curves):
        color = palette[k % len(palette)]
        hull = hull_of_curve(c)
        out.append(
            f'<g class="hull"><polygon points="{_points_attr(hull.vertices)}" fill="none" '
            f'stroke="{color}" stroke-width="{stroke}" stroke-dasharray="{_fmt(4 * float(stroke))}"/></g>'
        )
        out.append(
            f'<g class="curve"><polyline points="{_points_attr(c.vertices)}" fill="none" '
            f'stroke="{color}" stroke-width="{_fmt(2 * float(stroke))}"/></g>'
        )
        out.append(
            f'<g class="chord"><polyline points="{_points_attr([c.start, c.end])}" fill="none" '
            f'stroke="{color}" stroke-width="{stroke}" stroke-dasharray="{stroke} {_fmt(3 * float(stroke))}"/></g>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def write_campaign_csv(path, records: Iterable[CaseRecord]) -> int:
    """Write campaign rows with a header; returns the number of rows."""
    n = 0
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CaseRecord.CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.csv_row())
            n += 1
    return n
