"""Deterministic SVG rendering of 1-D and 2-D arrangements.

All geometry is computed in exact rationals; numbers are only rounded at the
final formatting step with a fixed-point integer rule, so identical input
yields byte-identical SVG on every platform. The viewport is the bounding box
of the pairwise intersection points padded by twenty percent (a drawing
heuristic with no mathematical content). Bounded nonempty chambers are
shaded, normals are drawn as arrows at the line midpoints, hyperplanes are
labeled H1..Hd.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction

from .arrangement import Arrangement, all_sign_vectors, chamber
from .errors import GuardError
from .feasibility import (
    affine_dimension,
    enumerate_vertices,
    is_bounded,
    is_feasible,
)

SIZE = 560
MARGIN = 40
LINE_HEIGHT = 200

CHAMBER_FILL = "#c9d7f2"
LINE_COLOR = "#1a1a1a"
ARROW_COLOR = "#7a7a7a"
AXIS_COLOR = "#1a1a1a"

MAX_RENDER_D = 12


def _fmt(value) -> str:
    """Fixed-point decimal with two digits, round half away from zero."""
    v = Fraction(value)
    num, den = (v * 100).numerator, (v * 100).denominator
    if num >= 0:
        r = (2 * num + den) // (2 * den)
    else:
        r = -((2 * (-num) + den) // (2 * den))
    whole, frac = divmod(abs(r), 100)
    sign = "-" if r < 0 else ""
    if frac == 0:
        return f"{sign}{whole}"
    digits = f"{frac:02d}".rstrip("0")
    return f"{sign}{whole}.{digits}"


def render_svg(arr: Arrangement, force: bool = False) -> str:
    if arr.n == 1:
        return _render_line(arr)
    if arr.n == 2:
        if arr.d > MAX_RENDER_D and not force:
            raise GuardError(
                f"rendering shades 2^d chambers; d = {arr.d} > {MAX_RENDER_D}, pass force=True"
            )
        return _render_plane(arr)
    raise ValueError("rendering supports n <= 2")


def _svg_header(width, height):
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]


def _render_line(arr: Arrangement) -> str:
    points = [-lift / Fraction(u[0]) for u, lift in zip(arr.normals, arr.lifts)]
    lo, hi = min(points), max(points)
    span = hi - lo
    pad = span / 5 if span > 0 else Fraction(1)
    lo, hi = lo - pad, hi + pad
    scale = Fraction(SIZE - 2 * MARGIN, 1) / (hi - lo)
    axis_y = Fraction(LINE_HEIGHT, 2) + 30

    def sx(x):
        return MARGIN + (x - lo) * scale

    parts = _svg_header(SIZE, LINE_HEIGHT)
    parts.append(
        f'<line x1="{_fmt(MARGIN)}" y1="{_fmt(axis_y)}" x2="{_fmt(SIZE - MARGIN)}" '
        f'y2="{_fmt(axis_y)}" stroke="{AXIS_COLOR}" stroke-width="1"/>'
    )
    for i, (point, u) in enumerate(zip(points, arr.normals)):
        px = sx(point)
        parts.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(axis_y)}" r="3.5" fill="{LINE_COLOR}"/>'
        )
        direction = 1 if u[0] > 0 else -1
        ay = axis_y - 16 - 14 * i
        tip = px + 18 * direction
        parts.append(
            f'<line x1="{_fmt(px)}" y1="{_fmt(ay)}" x2="{_fmt(tip)}" y2="{_fmt(ay)}" '
            f'stroke="{ARROW_COLOR}" stroke-width="1.2"/>'
        )
        parts.append(
            f'<polygon points="{_fmt(tip)},{_fmt(ay - 3)} {_fmt(tip)},{_fmt(ay + 3)} '
            f'{_fmt(tip + 5 * direction)},{_fmt(ay)}" fill="{ARROW_COLOR}"/>'
        )
        parts.append(
            f'<text x="{_fmt(px + 4)}" y="{_fmt(ay - 3)}" font-family="monospace" '
            f'font-size="11" fill="{LINE_COLOR}">H{i + 1}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _line_anchor_direction(u, lift):
    """A rational point on the line and a direction vector along it."""
    norm_sq = Fraction(u[0] * u[0] + u[1] * u[1])
    anchor = (-lift * u[0] / norm_sq, -lift * u[1] / norm_sq)
    direction = (Fraction(-u[1]), Fraction(u[0]))
    return anchor, direction


def _intersections(arr: Arrangement):
    points = []
    for i, j in itertools.combinations(range(arr.d), 2):
        u, v = arr.normals[i], arr.normals[j]
        denom = u[0] * v[1] - u[1] * v[0]
        if denom == 0:
            continue
        a, b = -arr.lifts[i], -arr.lifts[j]
        x = Fraction(a * v[1] - b * u[1], denom)
        y = Fraction(u[0] * b - v[0] * a, denom)
        points.append((x, y))
    return points


def _clip_params(anchor, direction, box):
    """Parameter interval of the line inside an axis-aligned box, or None."""
    (x0, x1), (y0, y1) = box
    t_lo, t_hi = None, None
    for a, d, lo, hi in ((anchor[0], direction[0], x0, x1), (anchor[1], direction[1], y0, y1)):
        if d == 0:
            if not lo <= a <= hi:
                return None
            continue
        t_first, t_second = (lo - a) / d, (hi - a) / d
        if t_first > t_second:
            t_first, t_second = t_second, t_first
        t_lo = t_first if t_lo is None else max(t_lo, t_first)
        t_hi = t_second if t_hi is None else min(t_hi, t_second)
    if t_lo is None or t_lo > t_hi:
        return None
    return t_lo, t_hi


def _sort_polygon(points):
    """Order convex polygon vertices counterclockwise by exact comparison."""
    k = len(points)
    cx = sum(p[0] for p in points) / k
    cy = sum(p[1] for p in points) / k

    def half(p):
        dx, dy = p[0] - cx, p[1] - cy
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def compare(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cross = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        return 0

    return sorted(points, key=functools.cmp_to_key(compare))


def _render_plane(arr: Arrangement) -> str:
    crossings = _intersections(arr)
    if crossings:
        xs = [p[0] for p in crossings]
        ys = [p[1] for p in crossings]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    else:
        x0 = x1 = y0 = y1 = Fraction(0)
    pad = max(x1 - x0, y1 - y0, Fraction(2)) / 5
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    extent = max(x1 - x0, y1 - y0)
    inner = Fraction(SIZE - 2 * MARGIN)
    scale = inner / extent
    ox = MARGIN + (inner - (x1 - x0) * scale) / 2
    oy = MARGIN + (inner - (y1 - y0) * scale) / 2

    def to_screen(p):
        return (ox + (p[0] - x0) * scale, SIZE - (oy + (p[1] - y0) * scale))

    parts = _svg_header(SIZE, SIZE)

    for eps in all_sign_vectors(arr.d):
        region = chamber(arr, eps)
        if not is_feasible(region).feasible:
            continue
        if affine_dimension(region) != 2 or not is_bounded(region):
            continue
        vertices = _sort_polygon(enumerate_vertices(region))
        coords = " ".join(
            f"{_fmt(sx)},{_fmt(sy)}" for sx, sy in (to_screen(v) for v in vertices)
        )
        parts.append(f'<polygon points="{coords}" fill="{CHAMBER_FILL}" stroke="none"/>')

    box = ((x0, x1), (y0, y1))
    arrow_len = extent / 18
    for i, (u, lift) in enumerate(zip(arr.normals, arr.lifts)):
        anchor, direction = _line_anchor_direction(u, lift)
        params = _clip_params(anchor, direction, box)
        if params is None:
            continue
        t_lo, t_hi = params
        p_start = (anchor[0] + t_lo * direction[0], anchor[1] + t_lo * direction[1])
        p_end = (anchor[0] + t_hi * direction[0], anchor[1] + t_hi * direction[1])
        s0, s1 = to_screen(p_start), to_screen(p_end)
        parts.append(
            f'<line x1="{_fmt(s0[0])}" y1="{_fmt(s0[1])}" x2="{_fmt(s1[0])}" '
            f'y2="{_fmt(s1[1])}" stroke="{LINE_COLOR}" stroke-width="1.5"/>'
        )
        t_mid = (t_lo + t_hi) / 2
        mid = (anchor[0] + t_mid * direction[0], anchor[1] + t_mid * direction[1])
        u_scale = arrow_len / max(abs(u[0]), abs(u[1]))
        tip = (mid[0] + u[0] * u_scale, mid[1] + u[1] * u_scale)
        base = (mid[0] + u[0] * u_scale * Fraction(7, 10), mid[1] + u[1] * u_scale * Fraction(7, 10))
        side = (direction[0] * u_scale * Fraction(15, 100), direction[1] * u_scale * Fraction(15, 100))
        sm, st = to_screen(mid), to_screen(tip)
        sb1 = to_screen((base[0] + side[0], base[1] + side[1]))
        sb2 = to_screen((base[0] - side[0], base[1] - side[1]))
        parts.append(
            f'<line x1="{_fmt(sm[0])}" y1="{_fmt(sm[1])}" x2="{_fmt(st[0])}" '
            f'y2="{_fmt(st[1])}" stroke="{ARROW_COLOR}" stroke-width="1.2"/>'
        )
        parts.append(
            f'<polygon points="{_fmt(sb1[0])},{_fmt(sb1[1])} {_fmt(sb2[0])},{_fmt(sb2[1])} '
            f'{_fmt(st[0])},{_fmt(st[1])}" fill="{ARROW_COLOR}"/>'
        )
        parts.append(
            f'<text x="{_fmt(s1[0] + 4)}" y="{_fmt(s1[1] - 4)}" font-family="monospace" '
            f'font-size="12" fill="{LINE_COLOR}">H{i + 1}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
