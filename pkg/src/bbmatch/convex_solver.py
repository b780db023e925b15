"""O(n^2) bottleneck matching for balanced 2-colored convex point sets.

Pipeline: orbit structure, then the S0/S1 interval tables, then the best
value over (a) all single-cascade matchings, taken at full-cycle states
S1(k+1, k) for boundary pairs of different colors, and (b) all
three-cascade combinations anchored at a candidate pair, i.e. a necessary
pair whose interval turns by at most 2*pi/3. The matching itself is
rebuilt from per-state choice codes in linear time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .core_geometry import (
    ColoredConvexInstance,
    CyclicInterval,
    MatchingResult,
    dist_sq,
    instance_from_arrays,
)
from .orbits import OrbitStructure, compute_o

TAU_LIMIT = 2.0 * math.pi / 3.0
TAU_EPS = 1e-9  # inclusive threshold: over-inclusion is value-safe


class InternalError(RuntimeError):
    """A solver invariant failed; indicates a bug, not bad input."""


@dataclass
class DPTables:
    """Dense tables over balanced cyclic intervals, diagonal-major.

    State (i, j) lives at row ((j - i) mod 2n - 1) >> 1, column i; undefined
    states hold +inf. ``necessary`` follows the operational rule (orbit
    edge, or minimum achieved only by matching the pair itself);
    ``necessary_def`` keeps only pairs forced into every optimal
    single-cascade matching of their interval.
    """

    m: int
    s0: np.ndarray
    s1: np.ndarray
    necessary: np.ndarray
    necessary_def: np.ndarray
    choice0: np.ndarray
    choice1: np.ndarray
    o: list[int]
    o_inv: list[int]
    scan_steps: int
    states_filled: int
    case_evals: int

    def _row(self, i: int, j: int) -> int:
        off = (j - i) % self.m
        if off % 2 == 0:
            raise KeyError(f"interval <{i}..{j}> has odd length; no state")
        return (off - 1) >> 1

    def s0_at(self, i: int, j: int) -> float:
        return float(self.s0[self._row(i, j), i % self.m])

    def s1_at(self, i: int, j: int) -> float:
        return float(self.s1[self._row(i, j), i % self.m])

    def necessary_at(self, i: int, j: int, variant: str = "operational") -> bool:
        nec = _necessary_array(self, variant)
        return bool(nec[self._row(i, j), i % self.m])


@dataclass
class CandidateSet:
    """Oriented necessary pairs with turning angle at most 2*pi/3."""

    pairs: list[tuple[int, int]]
    n: int

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)


def compute_dp(inst: ColoredConvexInstance, orb: OrbitStructure) -> DPTables:
    s0, s1, nec_op, nec_def, ch0, ch1, scan, states, evals = _kernels.fill_dp(
        inst.xs, inst.ys, inst.colors, orb.o, orb.o_inv, inst.prefix_balance[: inst.m]
    )
    return DPTables(
        inst.m, s0, s1, nec_op, nec_def, ch0, ch1,
        orb.o.tolist(), orb.o_inv.tolist(),
        int(scan), int(states), int(evals),
    )


def _necessary_array(dp: DPTables, variant: str) -> np.ndarray:
    if variant == "operational":
        return dp.necessary
    if variant == "definitional":
        return dp.necessary_def
    raise ValueError(f"unknown necessary variant {variant!r}")


def reconstruct(inst: ColoredConvexInstance, dp: DPTables, state) -> list[tuple[int, int]]:
    """Expand the choice codes of a filled ("S0"|"S1", i, j) state into pairs."""
    table, i0, j0 = state
    m = inst.m
    o = dp.o
    oi = dp.o_inv
    ch0 = dp.choice0
    ch1 = dp.choice1
    out: list[tuple[int, int]] = []
    stack = [(0 if table == "S0" else 1, i0 % m, j0 % m)]
    while stack:
        tbl, i, j = stack.pop()
        r = ((j - i) % m - 1) >> 1
        if tbl == 0:
            p = o[i] if ch0[r, i] == 0 else oi[i]
            out.append((i, p))
            if (p - i) % m != 1:
                stack.append((0, (i + 1) % m, (p - 1) % m))
            if p != j:
                stack.append((0, (p + 1) % m, j))
        else:
            c = ch1[r, i]
            if c <= 1:
                p = o[i]
                out.append((i, p))
                if (p - i) % m != 1:
                    stack.append((0 if c == 0 else 1, (i + 1) % m, (p - 1) % m))
                if p != j:
                    stack.append((1 if c == 0 else 0, (p + 1) % m, j))
            elif c <= 3:
                q = oi[j]
                out.append((q, j))
                if (j - q) % m != 1:
                    stack.append((0 if c == 2 else 1, (q + 1) % m, (j - 1) % m))
                if q != i:
                    stack.append((1 if c == 2 else 0, i, (q - 1) % m))
            else:
                out.append((i, j))
                if (j - i) % m != 1:
                    stack.append((1, (i + 1) % m, (j - 1) % m))
    return out


def solve_convex(
    inst: ColoredConvexInstance,
    orb: OrbitStructure | None = None,
    dp: DPTables | None = None,
    *,
    candidate_filter: bool = True,
    necessary_variant: str = "operational",
) -> MatchingResult:
    """Bottleneck matching over all non-crossing perfect matchings."""
    if orb is None:
        orb = compute_o(inst)
    if dp is None:
        dp = compute_dp(inst, orb)

    nec = _necessary_array(dp, necessary_variant)
    best, kind, a, b, c, scanned, combos = _kernels.search_best(
        dp.s1,
        inst.colors,
        inst.prefix_balance[: inst.m],
        nec,
        inst.ext_prefix,
        TAU_LIMIT + TAU_EPS,
        candidate_filter,
    )
    best = float(best)
    if not math.isfinite(best):
        raise InternalError("no single-cascade matching found; search is broken")

    m = inst.m
    if kind == 0:
        pairs = reconstruct(inst, dp, ("S1", (a + 1) % m, a))
    else:
        pairs = reconstruct(inst, dp, ("S1", a, b))
        pairs += reconstruct(inst, dp, ("S1", (b + 1) % m, c))
        pairs += reconstruct(inst, dp, ("S1", (c + 1) % m, (a - 1) % m))
    achieved = max(dist_sq(inst, i, j) for i, j in pairs)
    if achieved != best:
        raise InternalError(
            f"reconstructed matching has value {achieved}, search said {best}"
        )
    stats = {
        "dp_scan_steps": dp.scan_steps,
        "dp_states": dp.states_filled,
        "dp_case_evals": dp.case_evals,
        "search_pairs_scanned": int(scanned),
        "search_combos": int(combos),
        "orbit_steps": orb.steps,
    }
    return MatchingResult(pairs, best, math.sqrt(best), "convex", stats)


def enumerate_candidates(
    inst: ColoredConvexInstance,
    orb: OrbitStructure,
    dp: DPTables,
    *,
    necessary_variant: str = "operational",
) -> CandidateSet:
    """All oriented feasible pairs that are necessary and turn by <= 2*pi/3.

    Ordered by start index, then interval length.
    """
    m = inst.m
    nec = _necessary_array(dp, necessary_variant)
    zz = inst.prefix_balance[:m]
    col = inst.colors
    epre = inst.ext_prefix
    total = epre[m]

    ls = np.arange(1, m, 2)  # row r holds length offset ls[r] = 2r + 1
    ii = np.arange(m)[None, :]
    jj = (ii + ls[:, None]) % m
    feasible = (zz[ii] == zz[(jj + 1) % m]) & (col[ii] != col[jj])
    starts = (ii + 1) % m
    cnt = ls[:, None] - 1
    wrap = starts + cnt > m
    tau = np.where(
        wrap,
        (total - epre[starts]) + epre[np.where(wrap, starts + cnt - m, 0)],
        epre[np.minimum(starts + cnt, m)] - epre[starts],
    )
    mask = feasible & (nec != 0) & (tau <= TAU_LIMIT + TAU_EPS)
    hits = np.argwhere(mask)
    hits = hits[np.lexsort((hits[:, 0], hits[:, 1]))]  # by (i, then length)
    pairs = [(int(i), int((i + 2 * r + 1) % m)) for r, i in hits]
    return CandidateSet(pairs, inst.n)


def edge_only_matching(
    inst: ColoredConvexInstance, orb: OrbitStructure, iv: CyclicInterval
) -> list[tuple[int, int]]:
    """Match a balanced interval using orbit edges only: take (i, o(i)),
    recurse inside and after it."""
    m = inst.m
    o = orb.o.tolist()
    out: list[tuple[int, int]] = []
    stack = [(iv.i % m, iv.j % m)]
    while stack:
        i, j = stack.pop()
        p = o[i]
        out.append((i, p))
        if (p - i) % m != 1:
            stack.append(((i + 1) % m, (p - 1) % m))
        if p != j:
            stack.append(((p + 1) % m, j))
    return out


def solve_monochromatic(points) -> MatchingResult:
    """Bottleneck non-crossing matching of uncolored convex points.

    Colors the points alternately around the polygon and solves the
    2-colored problem; with alternating colors every pair of points at odd
    index distance is feasible, which is exactly the uncolored constraint.
    """
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise ValueError("expected an (m, 2) array of coordinates")
    m = pts.shape[0]
    colors = np.arange(m, dtype=np.uint8) % 2
    inst = instance_from_arrays(pts[:, 0], pts[:, 1], colors)
    result = solve_convex(inst)
    if result.stats is not None:
        result.stats["mono"] = True
    return result
