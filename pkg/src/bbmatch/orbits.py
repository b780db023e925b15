"""Orbit decomposition of a balanced 2-colored convex point set.

The successor function o maps each point to the first point in positive
direction forming a matchable (feasible) pair with it. Orbits are the
cycles of o; two points can appear together in some non-crossing perfect
matching exactly when they differ in color and share an orbit.

Both o and the orbit graph (total order plus crossing arcs, one unique
Hamiltonian path per weakly connected component) are built in O(n) by the
two-pass stack sweep and the consecutive-pair scan.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core_geometry import (
    RED,
    ColoredConvexInstance,
    CyclicInterval,
    chords_cross,
)


class PairClass(enum.Enum):
    EDGE = "edge"
    DIAGONAL = "diagonal"
    INFEASIBLE = "infeasible"


class EdgeKind(enum.Enum):
    RED_BLUE = "red-blue"
    BLUE_RED = "blue-red"


class Incomparable(RuntimeError):
    """Raised when the brute-force orbit comparator cannot order two orbits.

    This signals an implementation bug; it must never occur on valid input.
    """


@dataclass(frozen=True)
class OrbitEdge:
    start: int
    end: int  # = o[start]
    kind: EdgeKind


@dataclass(frozen=True)
class OrbitStructure:
    """o, its inverse, and the orbit partition.

    Orbit g occupies members[offsets[g]:offsets[g+1]], listed in CCW
    traversal order starting from its lowest index; orbit ids are assigned
    in order of that lowest index.
    """

    o: np.ndarray
    o_inv: np.ndarray
    orbit_id: np.ndarray
    members: np.ndarray
    offsets: np.ndarray
    colors: np.ndarray
    steps: int

    @property
    def num_orbits(self) -> int:
        return len(self.offsets) - 1

    @property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        mem = self.members.tolist()
        off = self.offsets.tolist()
        return tuple(tuple(mem[off[g]:off[g + 1]]) for g in range(len(off) - 1))

    def orbit_members(self, g: int) -> np.ndarray:
        return self.members[self.offsets[g]:self.offsets[g + 1]]


@dataclass(frozen=True)
class OrbitGraph:
    succ: tuple[int | None, ...]  # successor in the total order
    succ_g: tuple[int | None, ...]  # successor in the component's Hamiltonian path
    order: tuple[int, ...]  # all orbits, linearized by succ
    components: tuple[tuple[int, ...], ...]  # Hamiltonian-path sequences
    rb_max_sq: np.ndarray  # per orbit, longest red-blue edge (squared)
    br_max_sq: np.ndarray  # per orbit, longest blue-red edge (squared)
    steps: int


def compute_o(inst: ColoredConvexInstance) -> OrbitStructure:
    """Compute o, o^-1, and the orbit partition in O(n)."""
    o, sweep_steps = _kernels.orbit_stack_pass(inst.colors, inst.prefix_balance[: inst.m])
    o_inv, orbit_id, members, offsets, trace_steps = _kernels.orbit_trace(o)
    for arr in (o, o_inv, orbit_id, members, offsets):
        arr.setflags(write=False)
    return OrbitStructure(
        o, o_inv, orbit_id, members, offsets, inst.colors,
        int(sweep_steps) + int(trace_steps),
    )


def is_feasible(inst: ColoredConvexInstance, orb: OrbitStructure, i: int, j: int) -> bool:
    """True iff (i, j) appears in some non-crossing perfect matching.

    Equivalent to: different colors and <i..j> balanced.
    """
    return bool(
        inst.colors[i] != inst.colors[j] and orb.orbit_id[i] == orb.orbit_id[j]
    )


def classify_pair(orb: OrbitStructure, i: int, j: int) -> PairClass:
    if i == j:
        raise ValueError("pair endpoints must differ")
    if orb.colors[i] == orb.colors[j] or orb.orbit_id[i] != orb.orbit_id[j]:
        return PairClass.INFEASIBLE
    if orb.o[i] == j or orb.o[j] == i:
        return PairClass.EDGE
    return PairClass.DIAGONAL


def directed_edges(inst: ColoredConvexInstance, orb: OrbitStructure) -> list[OrbitEdge]:
    """All 2n directed orbit edges (i, o(i)); a 2-orbit yields both kinds."""
    return [
        OrbitEdge(i, int(orb.o[i]), EdgeKind.RED_BLUE if inst.colors[i] == RED else EdgeKind.BLUE_RED)
        for i in range(inst.m)
    ]


def build_orbit_graph(inst: ColoredConvexInstance, orb: OrbitStructure) -> OrbitGraph:
    """Total order, crossing arcs, and Hamiltonian paths in O(n).

    Weak components of the orbit graph are exactly the maximal runs of the
    total order linked by crossing arcs between consecutive orbits, so the
    consecutive-pair scan determines them completely.
    """
    k = orb.num_orbits
    succ_arr, succ_g_arr, rb_max, br_max, steps, ok = _kernels.graph_scan(
        inst.xs, inst.ys, inst.colors, orb.o, orb.o_inv, orb.orbit_id, k
    )
    if not ok:
        raise AssertionError("inconsistent total-order witnesses")

    succ_list = succ_arr.tolist()
    succ_g_list = succ_g_arr.tolist()
    has_pred = [False] * k
    for s in succ_list:
        if s >= 0:
            has_pred[s] = True
    heads = [x for x in range(k) if not has_pred[x]]
    if len(heads) != 1:
        raise AssertionError(f"total order has {len(heads)} chain heads")
    order = []
    cur = heads[0]
    while cur >= 0:
        order.append(cur)
        cur = succ_list[cur]
        steps += 1
    if len(order) != k:
        raise AssertionError("succ chain does not cover all orbits")

    components: list[tuple[int, ...]] = []
    run = [order[0]]
    for x in order[:-1]:
        steps += 1
        if succ_g_list[x] >= 0:
            run.append(succ_g_list[x])
        else:
            components.append(tuple(run))
            run = [succ_list[x]]
    components.append(tuple(run))

    rb_max.setflags(write=False)
    br_max.setflags(write=False)
    return OrbitGraph(
        tuple(None if s < 0 else s for s in succ_list),
        tuple(None if s < 0 else s for s in succ_g_list),
        tuple(order),
        tuple(components),
        rb_max,
        br_max,
        int(steps),
    )


def compare_orbits_bruteforce(
    inst: ColoredConvexInstance, orb: OrbitStructure, a: int, b: int
) -> int:
    """Order two orbits straight from the definition; test oracle, O(n^2).

    Returns -1 if orbit a precedes orbit b, +1 if b precedes a. An orbit A
    precedes B when no point of B lies strictly on the right side (inside
    the open interval <i..o(i)>) of any red-blue edge of A.
    """
    if a == b:
        raise ValueError("orbits must differ")

    def precedes(first: int, second: int) -> bool:
        pts = orb.orbit_members(second).tolist()
        for i in orb.orbit_members(first).tolist():
            if inst.colors[i] != RED:
                continue
            e = CyclicInterval(i, int(orb.o[i]))
            for p in pts:
                if p != e.i and p != e.j and e.contains(p, inst.m):
                    return False
        return True

    ab = precedes(a, b)
    ba = precedes(b, a)
    if ab == ba:
        raise Incomparable(f"orbits {a} and {b}: a<=b is {ab} and b<=a is {ba}")
    return -1 if ab else 1


def orbits_cross_bruteforce(orb: OrbitStructure, a: int, b: int) -> bool:
    """True iff some edge of orbit a crosses some edge of orbit b. Test oracle."""
    ea = [(int(i), int(orb.o[i])) for i in orb.orbit_members(a)]
    eb = [(int(j), int(orb.o[j])) for j in orb.orbit_members(b)]
    return any(chords_cross(p, q) for p in ea for q in eb)
