"""Disk-model SVG figures: geodesic polygons, axes, annotations.

Geodesics map to circular arcs orthogonal to the unit circle; arcs
flatter than curvature 1e-6 fall back to straight lines.  Output is
deterministic for fixed input.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .commutator import pentagon
from .cover import LiftedIsometry
from .halfplane import Isometry, Point, Polygon, axes_cross, axis, to_disk
from .surface import SurfaceRep, c_polygon, d_polygon
from .twist import twist_value

_FLAT_CURVATURE = 1e-6


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _arc_path(p: Point, q: Point) -> str:
    """SVG path segment for the geodesic from p to q in disk coordinates."""
    u = to_disk(p)
    w = to_disk(q)
    det = u.real * w.imag - u.imag * w.real
    start = f"M {_fmt(u.real)} {_fmt(u.imag)}"
    line = f"{start} L {_fmt(w.real)} {_fmt(w.imag)}"
    if abs(det) < 1e-12:
        return line  # diameter chord
    b1 = (abs(u) ** 2 + 1.0) / 2.0
    b2 = (abs(w) ** 2 + 1.0) / 2.0
    cx = (b1 * w.imag - b2 * u.imag) / det
    cy = (u.real * b2 - w.real * b1) / det
    r2 = cx * cx + cy * cy - 1.0
    if r2 <= 0.0:
        return line
    r = math.sqrt(r2)
    if 1.0 / r < _FLAT_CURVATURE:
        return line
    du = complex(u.real - cx, u.imag - cy)
    dw = complex(w.real - cx, w.imag - cy)
    sweep = 1 if (du.real * dw.imag - du.imag * dw.real) > 0 else 0
    return (
        f"{start} A {_fmt(r)} {_fmt(r)} 0 0 {sweep} "
        f"{_fmt(w.real)} {_fmt(w.imag)}"
    )


def _document(body: list[str], notes: Sequence[str], warnings: Sequence[str]) -> str:
    note_lines = []
    y = -1.0
    for text in notes:
        note_lines.append(
            f'<text x="-1.02" y="{_fmt(y)}" font-size="0.05" fill="#333">{text}</text>'
        )
        y += 0.06
    warn_lines = []
    y = 0.9
    for text in warnings:
        warn_lines.append(
            f'<text x="-1.02" y="{_fmt(y)}" font-size="0.05" fill="#b00">{text}</text>'
        )
        y += 0.06
    return "\n".join(
        [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'viewBox="-1.05 -1.05 2.1 2.1" width="600" height="600">',
            '<g transform="scale(1,-1)">',
            '<circle cx="0" cy="0" r="1" fill="none" stroke="#888" '
            'stroke-width="0.004"/>',
            *body,
            "</g>",
            *note_lines,
            *warn_lines,
            "</svg>",
        ]
    )


def _polygon_body(
    poly: Polygon, labels: Iterable[str] | None = None, color: str = "#06c"
) -> list[str]:
    body = []
    vs = poly.vertices
    m = len(vs)
    for k in range(m):
        d = _arc_path(vs[k], vs[(k + 1) % m])
        body.append(
            f'<path d="{d}" fill="none" stroke="{color}" stroke-width="0.008"/>'
        )
    names = list(labels) if labels is not None else [f"p{k}" for k in range(m)]
    for k, v in enumerate(vs):
        w = to_disk(v)
        body.append(
            f'<circle cx="{_fmt(w.real)}" cy="{_fmt(w.imag)}" r="0.012" '
            f'fill="#c33"/>'
        )
        body.append(
            f'<text x="{_fmt(w.real + 0.02)}" y="{_fmt(-(w.imag + 0.02))}" '
            f'font-size="0.05" fill="#c33" transform="scale(1,-1)">'
            f"{names[k]}</text>"
        )
    return body


def render_pentagon(a: LiftedIsometry, b: LiftedIsometry, p: Point) -> str:
    """Pentagon figure with area/twist annotations (boundary order
    p0, p4, p1, p2, p3)."""
    rep = pentagon(a, b, p)
    labels = ["p0", "p4", "p1", "p2", "p3"]
    notes = [
        f"area = {rep.area:.9f}",
        f"commutator twist = {rep.twist_of_commutator:.9f}",
        f"residual = {rep.residual:.3e}",
        f"simple = {rep.simple}",
    ]
    warnings = ["degenerate pentagon"] if rep.degenerate else []
    return _document(_polygon_body(rep.polygon, labels), notes, warnings)


def render_cpoly(cs: Sequence[LiftedIsometry], p: Point) -> str:
    rep = c_polygon(cs, p)
    notes = [
        f"area = {rep.area:.9f}",
        f"residual = {rep.residual:.3e}",
        f"simple = {rep.simple}",
    ]
    warnings = ["degenerate polygon"] if rep.degenerate else []
    return _document(_polygon_body(rep.polygon), notes, warnings)


def render_dpoly(rep: SurfaceRep) -> str:
    report = d_polygon(rep)
    notes = [
        f"area = {report.area:.9f}",
        f"residual = {report.residual:.3e}",
        f"convex = {report.convex}",
        f"decomposition residual = {report.decomposition_residual:.3e}",
    ]
    warnings = ["degenerate polygon"] if report.degenerate else []
    return _document(_polygon_body(report.polygon), notes, warnings)


def render_axes(g: Isometry, h: Isometry) -> str:
    """The two invariant geodesics, annotated with the crossing verdict."""
    body = []
    warnings = []
    for m, color in ((g, "#06c"), (h, "#393")):
        if abs(m.trace) > 2.0:
            geo = axis(m)
            body.append(
                f'<path d="{_arc_path(geo.start, geo.end)}" fill="none" '
                f'stroke="{color}" stroke-width="0.008"/>'
            )
        else:
            warnings.append("non-hyperbolic input has no axis")
    notes = [f"axes cross = {axes_cross(g, h)}"]
    return _document(body, notes, warnings)
