"""Figure data: lattice paths as SVG and 3D point clouds as plain lists."""

from __future__ import annotations

from .kw2d import KWCorners, render_path
from .kw3d import KW3Params, build_kw3, canonical_points_below_plane, gap_rep
from .semigroup import build, minimalize

CELL = 40
MARGIN = 30


def _xy(x: int, y: int, height: int) -> tuple[int, int]:
    return MARGIN + x * CELL, MARGIN + (height - y) * CELL


def path_svg(c: KWCorners) -> str:
    """Grid ``[0, q'] x [0, p']``, the staircase and a dot on each corner."""
    path = render_path(c)
    qh, ph = c.params.q_half, c.params.p_half
    width, height = 2 * MARGIN + qh * CELL, 2 * MARGIN + ph * CELL
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<title>KW({c.params.p},{c.params.q}) corners {list(c.lattice_corners)}</title>',
    ]
    for x in range(1, qh):
        x0, y0 = _xy(x, 0, ph)
        x1, y1 = _xy(x, ph, ph)
        out.append(f'<line class="grid" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ddd"/>')
    for y in range(1, ph):
        x0, y0 = _xy(0, y, ph)
        x1, y1 = _xy(qh, y, ph)
        out.append(f'<line class="grid" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#ddd"/>')
    rx, ry = _xy(0, ph, ph)
    out.append(f'<rect class="boundary" x="{rx}" y="{ry}" width="{qh * CELL}" '
               f'height="{ph * CELL}" fill="none" stroke="#000"/>')
    pts = " ".join("{},{}".format(*_xy(x, y, ph)) for x, y in path.points())
    out.append(f'<polyline class="path" points="{pts}" fill="none" stroke="#c00" stroke-width="3"/>')
    for x, y in c.lattice_corners:
        cx, cy = _xy(x, y, ph)
        out.append(f'<circle class="corner" cx="{cx}" cy="{cy}" r="5" fill="#c00"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def kw3_points(params: KW3Params, points=()) -> dict:
    """Lattice points of the gaps of the base semigroup and, for a member,
    the gaps that survive, the pseudo-Frobenius points and the Apery sets."""
    S = build(minimalize(params.base_generators))
    gaps = [{"point": list(pt), "value": params.gamma(*pt)}
            for pt in canonical_points_below_plane(params)]
    data = {"plane": {"coefficients": list(params.base_generators), "rhs": params.frobenius},
            "gaps_of_base": gaps}
    if points:
        K = build_kw3(params, points)
        H = K.H
        data["adjoined"] = [{"point": list(pt), "value": params.gamma(*pt)} for pt in K.points]
        data["gaps_of_member"] = [g for g in gaps if not H.contains(g["value"])]
        data["pseudo_frobenius"] = [
            {"point": list(gap_rep(params, f, S).point), "value": f} for f in H.pseudo_frobenius()]
        data["apery"] = {str(m): list(H.apery(m).elements) for m in params.base_generators}
    return data
