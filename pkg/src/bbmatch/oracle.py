"""Independent correctness machinery for the fast solvers.

Everything here shares only core_geometry with the production code paths:
feasibility is decided by prefix balance, never by orbits, so agreement
between oracle and solver is evidence against correlated bugs.

oracle_dp is the classic cubic interval DP: cutting the cycle anywhere is
safe because the chords of a non-crossing matching nest in linear order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core_geometry import (
    ColoredConvexInstance,
    CyclicInterval,
    MatchingResult,
    chords_cross,
    dist_sq,
    turning_angle,
)

TAU_LIMIT = 2.0 * math.pi / 3.0
TAU_EPS = 1e-9

ENUM_GUARD = 16  # exhaustive enumeration grows Catalan-like


class TooLarge(ValueError):
    pass


class NotADiagonal(ValueError):
    pass


class Polarity(enum.Enum):
    NEGATIVE = "negative"
    POSITIVE = "positive"
    VIOLATION = "violation"


@dataclass
class OracleTables:
    """Optimal squared bottleneck per balanced linear interval [i..j]."""

    b: np.ndarray
    choice: np.ndarray


def _oracle_tables(inst: ColoredConvexInstance) -> OracleTables:
    m = inst.m
    z = inst.prefix_balance
    col = inst.colors.tolist()
    xs = inst.xs.tolist()
    ys = inst.ys.tolist()
    b = np.full((m, m), np.inf)
    choice = np.full((m, m), -1, dtype=np.int32)
    for l in range(1, m, 2):
        for i in range(m - l):
            j = i + l
            if z[i] != z[j + 1]:
                continue
            best = np.inf
            bk = -1
            ci = col[i]
            for k in range(i + 1, j + 1, 2):
                if col[k] == ci or z[i] != z[k + 1]:
                    continue
                dx = xs[i] - xs[k]
                dy = ys[i] - ys[k]
                v = dx * dx + dy * dy
                if k > i + 1:
                    t = b[i + 1, k - 1]
                    if t > v:
                        v = t
                if k < j:
                    t = b[k + 1, j]
                    if t > v:
                        v = t
                if v < best:
                    best = v
                    bk = k
            b[i, j] = best
            choice[i, j] = bk
    return OracleTables(b, choice)


def oracle_dp(inst: ColoredConvexInstance) -> MatchingResult:
    """Exact bottleneck matching by the O(n^3) interval DP."""
    tables = _oracle_tables(inst)
    m = inst.m
    value_sq = float(tables.b[0, m - 1])
    if not math.isfinite(value_sq):
        raise AssertionError("oracle DP found no matching for a balanced instance")
    pairs: list[tuple[int, int]] = []
    stack = [(0, m - 1)]
    while stack:
        i, j = stack.pop()
        k = int(tables.choice[i, j])
        pairs.append((i, k))
        if k > i + 1:
            stack.append((i + 1, k - 1))
        if k < j:
            stack.append((k + 1, j))
    return MatchingResult(pairs, value_sq, math.sqrt(value_sq), "oracle")


def enumerate_all_matchings(inst: ColoredConvexInstance):
    """Yield every non-crossing bichromatic perfect matching exactly once."""
    if inst.m > ENUM_GUARD:
        raise TooLarge(f"enumeration guarded at 2n <= {ENUM_GUARD}, got {inst.m}")
    col = inst.colors.tolist()

    def rec(seq: tuple[int, ...]):
        if not seq:
            yield []
            return
        u = seq[0]
        for t in range(1, len(seq), 2):
            w = seq[t]
            if col[u] == col[w]:
                continue
            inner = seq[1:t]
            if sum(col[s] for s in inner) * 2 != len(inner):
                continue
            for left in rec(inner):
                for right in rec(seq[t + 1:]):
                    yield [(u, w)] + left + right

    yield from rec(tuple(range(inst.m)))


@dataclass
class VerificationReport:
    ok: bool
    violations: list[str]
    value_sq: float | None
    value: float | None

    @property
    def first_violation(self) -> str | None:
        return self.violations[0] if self.violations else None


def verify_matching(inst: ColoredConvexInstance, pairs) -> VerificationReport:
    """Check perfectness, one red + one blue per pair, and non-crossing;
    recompute the bottleneck value."""
    m = inst.m
    violations: list[str] = []
    pairs = [(int(a), int(b)) for a, b in pairs]

    seen = [0] * m
    for a, b in pairs:
        if a == b or not (0 <= a < m and 0 <= b < m):
            violations.append(f"bad pair ({a}, {b})")
            return VerificationReport(False, violations, None, None)
        seen[a] += 1
        seen[b] += 1
    if len(pairs) != m // 2 or any(s != 1 for s in seen):
        violations.append(
            f"not a perfect matching: {len(pairs)} pairs, multiplicities {sorted(set(seen))}"
        )
        return VerificationReport(False, violations, None, None)
    for a, b in pairs:
        if inst.colors[a] == inst.colors[b]:
            violations.append(f"monochromatic pair ({a}, {b})")
            break
    for s in range(len(pairs)):
        for t in range(s + 1, len(pairs)):
            if chords_cross(pairs[s], pairs[t]):
                violations.append(f"crossing pairs {pairs[s]} and {pairs[t]}")
                break
        else:
            continue
        break

    if violations:
        return VerificationReport(False, violations, None, None)
    value_sq = max(dist_sq(inst, a, b) for a, b in pairs)
    return VerificationReport(True, [], value_sq, math.sqrt(value_sq))


def any_matching(inst: ColoredConvexInstance, iv: CyclicInterval | None = None):
    """Constructive existence: scan from the interval's first point, match at
    the first sign change of the opposite-minus-same color counter, recurse
    on both sides. Valid but not necessarily optimal."""
    if iv is None:
        iv = CyclicInterval(0, inst.m - 1)
    col = inst.colors.tolist()
    seq = iv.members(inst.m)
    bal = sum(col[s] for s in seq)
    if bal * 2 != len(seq):
        raise ValueError("interval is not balanced")
    out: list[tuple[int, int]] = []
    stack = [seq]
    while stack:
        s = stack.pop()
        if not s:
            continue
        v = s[0]
        cv = col[v]
        diff = 0
        for t in range(1, len(s)):
            diff += 1 if col[s[t]] != cv else -1
            if diff == 1:
                out.append((v, s[t]))
                stack.append(s[1:t])
                stack.append(s[t + 1:])
                break
    return out


def _orbit_members_within(orb, i: int, j: int, m: int) -> list[int]:
    iv = CyclicInterval(i, j)
    out = []
    p = int(orb.o[i])
    while p != i and iv.contains(p, m):
        if p != j:
            out.append(p)
        p = int(orb.o[p])
    return out


def polarity_check(
    inst: ColoredConvexInstance,
    orb,
    dp,
    pair: tuple[int, int],
    *,
    necessary_variant: str = "operational",
) -> Polarity:
    """Locate the interval's orbit points relative to a candidate diagonal.

    The diagonal (i, j) spans a circular-arc lens on its right side; the two
    arcs centered at the endpoints with radius |v_i v_j| carve it into a
    region near i (far from j) and a region near j (far from i). All orbit
    mates must fall on one side; sides are tested by distance with a
    relative 1e-9 slack, region-near-i first for boundary points.
    """
    i, j = pair
    if inst.colors[i] == inst.colors[j] or orb.orbit_id[i] != orb.orbit_id[j]:
        raise NotADiagonal(f"({i}, {j}) is not a feasible pair")
    if orb.o[i] == j or orb.o[j] == i:
        raise NotADiagonal(f"({i}, {j}) is an orbit edge")
    if not dp.necessary_at(i, j, necessary_variant):
        raise NotADiagonal(f"({i}, {j}) is not a necessary pair")
    if turning_angle(inst, i, j) > TAU_LIMIT + TAU_EPS:
        raise NotADiagonal(f"({i}, {j}) turns by more than 2*pi/3")

    length = math.sqrt(dist_sq(inst, i, j))
    tol = 1e-9 * length
    all_near_i = True
    all_near_j = True
    for p in _orbit_members_within(orb, i, j, inst.m):
        d_i = math.sqrt(dist_sq(inst, p, i))
        d_j = math.sqrt(dist_sq(inst, p, j))
        if d_j < length - tol:
            all_near_i = False
        if d_i < length - tol:
            all_near_j = False
    if all_near_i:
        return Polarity.NEGATIVE
    if all_near_j:
        return Polarity.POSITIVE
    return Polarity.VIOLATION


def polarity_pole(pair: tuple[int, int], polarity: Polarity) -> int:
    if polarity is Polarity.NEGATIVE:
        return pair[0]
    if polarity is Polarity.POSITIVE:
        return pair[1]
    raise ValueError("violations have no pole")
