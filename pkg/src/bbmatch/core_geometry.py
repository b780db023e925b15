"""Instances, cyclic-index arithmetic, and exact combinatorial predicates.

Points are stored as flat numpy arrays (coordinates, colors, prefix color
balance) so the linear-time solvers stay fast at large sizes; the
``ColoredPoint`` view is materialized on demand for small-scale work.

Chord crossing is decided purely from cyclic index order, never from
floating-point geometry: on a strictly convex polygon two chords cross
exactly when their endpoints interleave around the boundary.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field

import numpy as np

RED = 0
BLUE = 1


class Color(enum.IntEnum):
    RED = 0
    BLUE = 1

    @property
    def letter(self) -> str:
        return "R" if self is Color.RED else "B"


class InstanceError(ValueError):
    """Base class for instance validation failures."""


class OddCount(InstanceError):
    pass


class UnbalancedColors(InstanceError):
    pass


class DuplicatePoint(InstanceError):
    pass


class NotStrictlyConvex(InstanceError):
    pass


class SharedEndpoint(ValueError):
    pass


@dataclass(frozen=True)
class ColoredPoint:
    x: float
    y: float
    color: Color

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InstanceError(f"non-finite coordinate ({self.x}, {self.y})")


@dataclass(frozen=True)
class CyclicInterval:
    """Inclusive cyclic interval <i..j>, traversed in positive direction."""

    i: int
    j: int

    def length(self, m: int) -> int:
        return (self.j - self.i) % m + 1

    def contains(self, k: int, m: int) -> bool:
        return (k - self.i) % m <= (self.j - self.i) % m

    def members(self, m: int) -> list[int]:
        return [(self.i + t) % m for t in range(self.length(m))]


@dataclass(frozen=True)
class ColoredConvexInstance:
    """A balanced 2-colored point set in strictly convex CCW position.

    ``colors`` holds 0 for red, 1 for blue. ``prefix_balance`` is the array
    z of length 2n+1 with z[i] = (#red - #blue) among points 0..i-1, so any
    cyclic interval's color balance is an O(1) lookup.
    """

    xs: np.ndarray
    ys: np.ndarray
    colors: np.ndarray
    prefix_balance: np.ndarray
    exterior_angles: np.ndarray = field(repr=False)
    ext_prefix: np.ndarray = field(repr=False)

    @property
    def m(self) -> int:
        return len(self.xs)

    @property
    def n(self) -> int:
        return len(self.xs) // 2

    @property
    def points(self) -> tuple[ColoredPoint, ...]:
        return tuple(
            ColoredPoint(float(x), float(y), Color(int(c)))
            for x, y, c in zip(self.xs, self.ys, self.colors)
        )

    def point(self, i: int) -> ColoredPoint:
        return ColoredPoint(float(self.xs[i]), float(self.ys[i]), Color(int(self.colors[i])))


def _exterior_angles(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """CCW exterior angle at each vertex, from atan2 of consecutive edges.

    A 2-point "polygon" reverses direction at both endpoints: pi each.
    """
    if len(xs) == 2:
        return np.array([math.pi, math.pi])
    ex = np.roll(xs, -1) - xs
    ey = np.roll(ys, -1) - ys
    px = np.roll(ex, 1)
    py = np.roll(ey, 1)
    cross = px * ey - py * ex
    dot = px * ex + py * ey
    return np.arctan2(cross, dot)


def instance_from_arrays(xs, ys, colors) -> ColoredConvexInstance:
    """Validate raw coordinate/color arrays and build an instance.

    Raises OddCount, UnbalancedColors, DuplicatePoint, or NotStrictlyConvex.
    """
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    colors = np.ascontiguousarray(colors, dtype=np.uint8)
    m = len(xs)
    if len(ys) != m or len(colors) != m:
        raise InstanceError("coordinate/color arrays must have equal length")
    if m < 2 or m % 2 != 0:
        raise OddCount(f"need an even number of points >= 2, got {m}")
    if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
        raise InstanceError("non-finite coordinate")
    if not np.all(colors <= 1):
        raise InstanceError("colors must be 0 (red) or 1 (blue)")

    n_red = int(np.sum(colors == RED))
    if n_red * 2 != m:
        raise UnbalancedColors(f"{n_red} red vs {m - n_red} blue points")

    order = np.lexsort((ys, xs))
    sx = xs[order]
    sy = ys[order]
    if np.any((sx[1:] == sx[:-1]) & (sy[1:] == sy[:-1])):
        raise DuplicatePoint("duplicate coordinates in input")

    # Strict convexity + CCW orientation: every consecutive cross product
    # positive, and exterior angles summing to one full turn (rules out
    # polylines winding more than once). A 2-point instance is trivially
    # convex; its exterior angles are pi at both endpoints.
    if m > 2:
        x1 = np.roll(xs, -1)
        y1 = np.roll(ys, -1)
        x2 = np.roll(xs, -2)
        y2 = np.roll(ys, -2)
        cross = (x1 - xs) * (y2 - y1) - (y1 - ys) * (x2 - x1)
        if not np.all(cross > 0.0):
            raise NotStrictlyConvex(
                f"cross product <= 0 at vertex {int(np.argmin(cross > 0))} "
                "(collinear triple, duplicate, or clockwise order)"
            )
    ext = _exterior_angles(xs, ys)
    total = float(np.sum(ext))
    if abs(total - 2.0 * math.pi) > 1e-6:
        raise NotStrictlyConvex(f"exterior angles sum to {total}, expected 2*pi")

    z = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(np.where(colors == RED, 1, -1), out=z[1:])
    ext_prefix = np.zeros(m + 1, dtype=np.float64)
    np.cumsum(ext, out=ext_prefix[1:])
    for arr in (xs, ys, colors, z, ext, ext_prefix):
        arr.setflags(write=False)
    return ColoredConvexInstance(xs, ys, colors, z, ext, ext_prefix)


def validate_instance(points) -> ColoredConvexInstance:
    """Validate a sequence of ColoredPoint (or (x, y, color) triples)."""
    xs, ys, cs = [], [], []
    for p in points:
        if isinstance(p, ColoredPoint):
            xs.append(p.x)
            ys.append(p.y)
            cs.append(int(p.color))
        else:
            x, y, c = p
            xs.append(float(x))
            ys.append(float(y))
            cs.append(int(c))
    return instance_from_arrays(xs, ys, cs)


def is_balanced(inst: ColoredConvexInstance, iv: CyclicInterval) -> bool:
    """True iff <i..j> holds equally many red and blue points. O(1).

    Works for wrapped intervals because z[0] = z[2n] = 0 makes the balance
    of <i..j> equal to z[j+1] - z[i] in every case.
    """
    z = inst.prefix_balance
    i = iv.i % inst.m
    j = iv.j % inst.m
    return bool(z[i] == z[j + 1])


def _strictly_inside(x: int, s: int, e: int) -> bool:
    # x strictly inside the open cyclic arc from s to e (positive direction)
    if s < e:
        return s < x < e
    return x > s or x < e


def chords_cross(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Exact crossing test for two polygon chords given by index pairs.

    True iff exactly one endpoint of b lies strictly inside the open cyclic
    interval between a's endpoints, i.e. the endpoints interleave.
    """
    a0, a1 = a
    b0, b1 = b
    if len({a0, a1, b0, b1}) != 4:
        raise SharedEndpoint(f"chords {a} and {b} share an endpoint")
    return _strictly_inside(b0, a0, a1) != _strictly_inside(b1, a0, a1)


def turning_angle(inst: ColoredConvexInstance, i: int, j: int) -> float:
    """Accumulated CCW exterior angle over the interior vertices of <i..j>.

    tau(i, i+1) = 0; result lies in [0, 2*pi) for any proper interval.
    """
    m = inst.m
    off = (j - i) % m
    if off == 0:
        raise ValueError("turning angle needs an interval of length >= 2")
    count = off - 1
    if count == 0:
        return 0.0
    a = (i + 1) % m
    pref = inst.ext_prefix
    if a + count <= m:
        return float(pref[a + count] - pref[a])
    return float((pref[m] - pref[a]) + pref[a + count - m])


def dist_sq(inst: ColoredConvexInstance, i: int, j: int) -> float:
    dx = inst.xs[i] - inst.xs[j]
    dy = inst.ys[i] - inst.ys[j]
    return float(dx * dx + dy * dy)


@dataclass
class MatchingResult:
    """A perfect non-crossing bichromatic matching plus its bottleneck value."""

    pairs: list[tuple[int, int]]
    value_sq: float
    value: float
    solver: str
    stats: dict | None = None


# ---------------------------------------------------------------------------
# Named fixtures reused across the test suite and the docs.

def _regular_polygon(m: int, letters: str) -> ColoredConvexInstance:
    ang = 2.0 * math.pi * np.arange(m) / m
    colors = [0 if ch == "R" else 1 for ch in letters]
    return instance_from_arrays(np.cos(ang), np.sin(ang), colors)


def fixture_sq4() -> ColoredConvexInstance:
    """Unit square corners, alternating colors."""
    return validate_instance(
        [(1.0, 0.0, RED), (0.0, 1.0, BLUE), (-1.0, 0.0, RED), (0.0, -1.0, BLUE)]
    )


def fixture_rrbb4() -> ColoredConvexInstance:
    """Unit square corners, grouped colors RRBB."""
    return validate_instance(
        [(1.0, 0.0, RED), (0.0, 1.0, RED), (-1.0, 0.0, BLUE), (0.0, -1.0, BLUE)]
    )


def fixture_hex6() -> ColoredConvexInstance:
    """Regular hexagon, unit circumradius, colors R B B R R B."""
    return _regular_polygon(6, "RBBRRB")


def fixture_oct8() -> ColoredConvexInstance:
    """Regular octagon, unit circumradius, colors R B B R R B B R."""
    return _regular_polygon(8, "RBBRRBBR")


FIXTURES = {
    "SQ4": fixture_sq4,
    "RRBB4": fixture_rrbb4,
    "HEX6": fixture_hex6,
    "OCT8": fixture_oct8,
}


# ---------------------------------------------------------------------------
# Plain-text and JSON instance formats.
#
# Text: first non-comment line is the point count 2n, followed by 2n lines
# "x y c" with c in {R, B}, CCW order. '#' starts a comment.
# JSON: {"points": [{"x": .., "y": .., "c": "R"|"B"}, ...]}

def parse_instance_text(text: str) -> ColoredConvexInstance:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise InstanceError("empty instance file")
    try:
        count = int(rows[0])
    except ValueError as exc:
        raise InstanceError(f"bad point count line: {rows[0]!r}") from exc
    if len(rows) - 1 != count:
        raise InstanceError(f"expected {count} point lines, found {len(rows) - 1}")
    xs, ys, cs = [], [], []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 3 or parts[2] not in ("R", "B"):
            raise InstanceError(f"bad point line: {line!r}")
        xs.append(float(parts[0]))
        ys.append(float(parts[1]))
        cs.append(RED if parts[2] == "R" else BLUE)
    return instance_from_arrays(xs, ys, cs)


def format_instance_text(inst: ColoredConvexInstance) -> str:
    lines = [str(inst.m)]
    letters = ("R", "B")
    for x, y, c in zip(inst.xs, inst.ys, inst.colors):
        lines.append(f"{float(x)!r} {float(y)!r} {letters[c]}")
    return "\n".join(lines) + "\n"


def parse_instance_json(text: str) -> ColoredConvexInstance:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"bad instance JSON: {exc}") from exc
    if not isinstance(obj, dict) or "points" not in obj:
        raise InstanceError('instance JSON must be {"points": [...]}')
    xs, ys, cs = [], [], []
    for p in obj["points"]:
        if p.get("c") not in ("R", "B"):
            raise InstanceError(f"bad color in point {p!r}")
        xs.append(float(p["x"]))
        ys.append(float(p["y"]))
        cs.append(RED if p["c"] == "R" else BLUE)
    return instance_from_arrays(xs, ys, cs)


def format_instance_json(inst: ColoredConvexInstance) -> str:
    letters = ("R", "B")
    points = [
        {"x": float(x), "y": float(y), "c": letters[c]}
        for x, y, c in zip(inst.xs, inst.ys, inst.colors)
    ]
    return json.dumps({"points": points})


def parse_instance(text: str) -> ColoredConvexInstance:
    """Sniff text vs JSON by the first non-space character."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_instance_json(text)
    return parse_instance_text(text)
