"""Deterministic SVG rendering of instances, matchings, and orbits."""

from __future__ import annotations

from .core_geometry import RED, ColoredConvexInstance
from .orbits import OrbitStructure, compute_o

RED_FILL = "#d62728"
BLUE_FILL = "#1f77b4"
ORBIT_PALETTE = (
    "#8dd3c7", "#bebada", "#fb8072", "#80b1d3",
    "#fdb462", "#b3de69", "#fccde5", "#d9d9d9",
)


def _viewport(inst: ColoredConvexInstance, size: int, margin: float):
    xmin, xmax = float(inst.xs.min()), float(inst.xs.max())
    ymin, ymax = float(inst.ys.min()), float(inst.ys.max())
    span = max(xmax - xmin, ymax - ymin) or 1.0
    scale = (size - 2.0 * margin) / span
    cx = (xmin + xmax) / 2.0
    cy = (ymin + ymax) / 2.0

    def tx(x: float, y: float) -> tuple[float, float]:
        return (
            size / 2.0 + (x - cx) * scale,
            size / 2.0 - (y - cy) * scale,  # y grows downward in SVG
        )

    return tx


def _path(coords, close: bool) -> str:
    parts = [f"{'M' if t == 0 else 'L'}{x:.6f} {y:.6f}" for t, (x, y) in enumerate(coords)]
    return "".join(parts) + ("z" if close else "")


def render_svg(
    inst: ColoredConvexInstance,
    matching=None,
    orbit_structure: OrbitStructure | None = None,
    *,
    show_orbits: bool = False,
    size: int = 640,
) -> str:
    """Polygon outline, colored points, matching segments (orbit edges
    dashed, diagonals solid), optional per-orbit shading. Byte-deterministic
    for fixed input."""
    tx = _viewport(inst, size, margin=40.0)
    pts = [tx(float(x), float(y)) for x, y in zip(inst.xs, inst.ys)]

    orb = orbit_structure
    if orb is None and (show_orbits or matching):
        orb = compute_o(inst)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
        f'<path class="outline" d="{_path(pts, close=True)}" fill="none" '
        f'stroke="#999999" stroke-width="1"/>',
    ]

    if show_orbits and orb is not None:
        for oid, members in enumerate(orb.orbits):
            color = ORBIT_PALETTE[oid % len(ORBIT_PALETTE)]
            coords = [pts[i] for i in members]
            out.append(
                f'<path class="orbit" data-orbit="{oid}" d="{_path(coords, close=True)}" '
                f'fill="{color}" fill-opacity="0.25" stroke="{color}" stroke-width="1"/>'
            )

    if matching:
        for a, b in matching:
            a, b = int(a), int(b)
            is_edge = orb is not None and (orb.o[a] == b or orb.o[b] == a)
            dash = ' stroke-dasharray="6 4"' if is_edge else ""
            cls = "pair edge" if is_edge else "pair diagonal"
            (x1, y1), (x2, y2) = pts[a], pts[b]
            out.append(
                f'<line class="{cls}" x1="{x1:.6f}" y1="{y1:.6f}" '
                f'x2="{x2:.6f}" y2="{y2:.6f}" stroke="#222222" stroke-width="2"{dash}/>'
            )

    for i, (x, y) in enumerate(pts):
        fill = RED_FILL if inst.colors[i] == RED else BLUE_FILL
        cls = "pt red" if inst.colors[i] == RED else "pt blue"
        out.append(
            f'<circle class="{cls}" data-index="{i}" cx="{x:.6f}" cy="{y:.6f}" '
            f'r="4" fill="{fill}" stroke="#333333" stroke-width="0.5"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
