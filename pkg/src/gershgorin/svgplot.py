"""Deterministic SVG 1.1 rendering of disks, region boundaries, eigenvalues,
and tracked eigenvalue paths.

Output bytes depend only on the matrix and the options: fixed float
formatting, stable element order, no ids or timestamps. The complex plane
is drawn with the imaginary axis pointing up (SVG y coordinates are the
negated imaginary parts).
"""

from __future__ import annotations

import math

from .geometry import (
    Arc,
    Contour,
    connected_regions,
    gershgorin_disks,
    region_contour,
)
from .matrix import as_matrix, eigenvalues_oracle
from .tracking import track


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _xy(z: complex) -> tuple[float, float]:
    return z.real, -z.imag


def _arc_piece(arc: Arc, t0: float, t1: float) -> str:
    x, y = _xy(arc.point_at(t1))
    large = 1 if (t1 - t0) > math.pi else 0
    # counterclockwise in the plane renders counterclockwise on screen:
    # the y-negation and SVG's downward y axis cancel, so sweep stays 0
    return f"A {_fmt(arc.radius)} {_fmt(arc.radius)} 0 {large} 0 {_fmt(x)} {_fmt(y)}"


def _loop_path(loop: tuple[Arc, ...]) -> str:
    x0, y0 = _xy(loop[0].start_point)
    parts = [f"M {_fmt(x0)} {_fmt(y0)}"]
    for arc in loop:
        if arc.span > math.pi:
            mid = arc.theta_start + 0.5 * arc.span
            parts.append(_arc_piece(arc, arc.theta_start, mid))
            parts.append(_arc_piece(arc, mid, arc.theta_end))
        else:
            parts.append(_arc_piece(arc, arc.theta_start, arc.theta_end))
    parts.append("Z")
    return " ".join(parts)


def render_svg(a, *, inflation: float | None = None, width: float = 640.0) -> str:
    """Full plot: disks, inflated region boundaries, eigenvalue crosses,
    and the chained homotopy paths as polylines."""
    a = as_matrix(a)
    disks = gershgorin_disks(a)
    rs = connected_regions(disks)
    contours: list[Contour] = [region_contour(rs, r, inflation)
                               for r in range(len(rs.regions))]
    spectrum = eigenvalues_oracle(a)
    trace = track(a)

    xs: list[float] = []
    ys: list[float] = []
    for d in disks:
        xs += [d.center.real - d.radius, d.center.real + d.radius]
        ys += [d.center.imag - d.radius, d.center.imag + d.radius]
    for contour in contours:
        for arc in contour.arcs:
            xs += [arc.center.real - arc.radius, arc.center.real + arc.radius]
            ys += [arc.center.imag - arc.radius, arc.center.imag + arc.radius]
    for value in spectrum:
        xs.append(value.real)
        ys.append(value.imag)
    for row in trace.spectra:
        for value in row:
            xs.append(value.real)
            ys.append(value.imag)

    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-6)
    margin = 0.06 * span
    x_min, x_max = min(xs) - margin, max(xs) + margin
    y_min, y_max = min(ys) - margin, max(ys) + margin
    box_w, box_h = x_max - x_min, y_max - y_min
    height = width * box_h / box_w
    stroke = 0.0035 * max(box_w, box_h)
    cross = 0.018 * max(box_w, box_h)
    dot = 0.007 * max(box_w, box_h)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="{_fmt(x_min)} {_fmt(-y_max)} {_fmt(box_w)} {_fmt(box_h)}">'
    ]

    out.append(f'<g class="disks" fill="none" stroke="#5b8bb5" '
               f'stroke-width="{_fmt(stroke)}">')
    for d in disks:
        x, y = _xy(d.center)
        if d.radius > 0:
            out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" '
                       f'r="{_fmt(d.radius)}"/>')
        else:
            out.append(f'<circle class="disk-point" cx="{_fmt(x)}" '
                       f'cy="{_fmt(y)}" r="{_fmt(dot)}" fill="#5b8bb5" '
                       'stroke="none"/>')
    out.append('</g>')

    out.append(f'<g class="regions" fill="none" stroke="#c46231" '
               f'stroke-width="{_fmt(stroke)}" stroke-dasharray='
               f'"{_fmt(3 * stroke)} {_fmt(2 * stroke)}">')
    for contour in contours:
        for loop in contour.loops:
            out.append(f'<path d="{_loop_path(loop)}"/>')
    out.append('</g>')

    out.append(f'<g class="tracks" fill="none" stroke="#4f9d55" '
               f'stroke-width="{_fmt(stroke)}">')
    n = len(trace.spectra[0])
    for j in range(n):
        pts = " ".join(
            f"{_fmt(row[j].real)},{_fmt(-row[j].imag)}" for row in trace.spectra)
        out.append(f'<polyline points="{pts}"/>')
    out.append('</g>')

    out.append(f'<g class="eigenvalues" fill="none" stroke="#222222" '
               f'stroke-width="{_fmt(stroke)}">')
    for value in spectrum:
        x, y = _xy(value)
        out.append(
            f'<path d="M {_fmt(x - cross)} {_fmt(y)} L {_fmt(x + cross)} '
            f'{_fmt(y)} M {_fmt(x)} {_fmt(y - cross)} L {_fmt(x)} '
            f'{_fmt(y + cross)}"/>')
    out.append('</g>')

    out.append('</svg>')
    return "\n".join(out) + "\n"
