"""O(n) bottleneck matching for balanced 2-colored points on a circle.

On a circle some bottleneck matching pairs every point with an orbit
neighbor, so it suffices to pick, per orbit, either all red-blue or all
blue-red edges. Along each Hamiltonian path of the orbit graph the valid
choices are exactly the splits "red-blue prefix, blue-red suffix", and the
best split falls out of one prefix-max and one suffix-max sweep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core_geometry import RED, BLUE, ColoredConvexInstance, MatchingResult
from .orbits import OrbitGraph, OrbitStructure, build_orbit_graph, compute_o

NEG_INF = float("-inf")  # identity for empty red-blue / blue-red ranges


class NotOnCircle(ValueError):
    """Input points are not concyclic within tolerance."""


@dataclass
class ComponentPlan:
    """Split choice for one Hamiltonian path L_0..L_{k-1}.

    rb_prefix[l] is the longest red-blue edge among L_0..L_{l-1} (squared),
    br_suffix[l] the longest blue-red edge among L_l..L_{k-1}; the chosen
    split minimizes max(rb_prefix[l], br_suffix[l]), lowest l on ties.
    """

    orbit_seq: tuple[int, ...]
    rb_prefix: list[float]
    br_suffix: list[float]
    chosen_l: int
    value_sq: float


def component_plan(orbit_seq, rb_max_sq, br_max_sq) -> ComponentPlan:
    k = len(orbit_seq)
    rb = [NEG_INF] * (k + 1)
    for l in range(1, k + 1):
        e = rb_max_sq[orbit_seq[l - 1]]
        rb[l] = e if e > rb[l - 1] else rb[l - 1]
    br = [NEG_INF] * (k + 1)
    for l in range(k - 1, -1, -1):
        e = br_max_sq[orbit_seq[l]]
        br[l] = e if e > br[l + 1] else br[l + 1]
    best_l = 0
    best = max(rb[0], br[0])
    for l in range(1, k + 1):
        v = max(rb[l], br[l])
        if v < best:
            best = v
            best_l = l
    return ComponentPlan(tuple(orbit_seq), rb, br, best_l, best)


def circumcenter(ax, ay, bx, by, cx, cy):
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        return None
    a2 = ax * ax + ay * ay
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d
    uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d
    return ux, uy


def check_concyclic(inst: ColoredConvexInstance, rel_tol: float = 1e-6) -> None:
    """Fit a circumcircle through three spread-out points; raise NotOnCircle
    unless every radius agrees within relative tolerance."""
    m = inst.m
    if m < 3:
        return
    a, b, c = 0, m // 3, (2 * m) // 3
    center = circumcenter(
        inst.xs[a], inst.ys[a], inst.xs[b], inst.ys[b], inst.xs[c], inst.ys[c]
    )
    if center is None:
        raise NotOnCircle("reference points are collinear")
    ux, uy = center
    radii_sq = (inst.xs - ux) ** 2 + (inst.ys - uy) ** 2
    r = math.sqrt(float(radii_sq[a]))
    dev = float(abs(radii_sq ** 0.5 - r).max())
    if dev > rel_tol * r:
        raise NotOnCircle(f"radius deviation {dev:.3g} exceeds {rel_tol:g} * {r:.3g}")


def solve_circle(
    inst: ColoredConvexInstance,
    orb: OrbitStructure | None = None,
    graph: OrbitGraph | None = None,
) -> MatchingResult:
    """Bottleneck matching for concyclic input, in O(n) total."""
    check_concyclic(inst)
    if orb is None:
        orb = compute_o(inst)
    if graph is None:
        graph = build_orbit_graph(inst, orb)

    rb = graph.rb_max_sq.tolist()
    br = graph.br_max_sq.tolist()
    steps = orb.steps + graph.steps
    want = np.empty(orb.num_orbits, dtype=np.uint8)  # chosen edge color per orbit
    value_sq = NEG_INF
    for comp in graph.components:
        plan = component_plan(comp, rb, br)
        steps += 3 * (len(comp) + 1)
        if plan.value_sq > value_sq:
            value_sq = plan.value_sq
        for pos, g in enumerate(comp):
            want[g] = RED if pos < plan.chosen_l else BLUE
    starts = np.nonzero(inst.colors == want[orb.orbit_id])[0]
    steps += inst.m
    pairs = list(zip(starts.tolist(), orb.o[starts].tolist()))
    value_sq = float(value_sq)
    stats = {"steps": steps, "orbit_steps": orb.steps, "graph_steps": graph.steps}
    return MatchingResult(pairs, value_sq, math.sqrt(value_sq), "circle", stats)
