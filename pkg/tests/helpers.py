"""Shared brute-force oracles and generators for the test suite.

Everything here recomputes from first principles (definitions, exhaustive
enumeration, coordinate geometry) so that agreement with the library is
meaningful evidence.
"""

from __future__ import annotations

import itertools
import math

from bbmatch.core_geometry import RED, ColoredConvexInstance, dist_sq
from bbmatch.gen import Coloring, GenSpec, Shape, generate


def random_instance(
    n: int,
    seed: int,
    shape: Shape = Shape.CONVEX,
    coloring: Coloring = Coloring.RANDOM_BALANCED,
) -> ColoredConvexInstance:
    return generate(GenSpec(n=n, shape=shape, coloring=coloring, seed=seed))


def ellipse_instance(
    n: int, seed: int, flatten: float = 0.3, coloring: Coloring = Coloring.RANDOM_BALANCED
) -> ColoredConvexInstance:
    """Points on a flattened ellipse; elongated shapes are where necessary
    diagonals (and thus the polarity machinery) actually show up."""
    import numpy as np

    from bbmatch.core_geometry import instance_from_arrays

    rng = np.random.default_rng(seed)
    m = 2 * n
    while True:
        ang = np.sort(rng.random(m)) * 2.0 * np.pi  # clumpy on purpose
        if np.min(np.diff(ang)) > 1e-6:
            break
    if coloring is Coloring.ALTERNATING:
        cs = np.arange(m) % 2
    elif coloring is Coloring.GROUPED:
        cs = np.repeat([0, 1], n)
    else:
        cs = rng.permutation(np.repeat([0, 1], n))
    return instance_from_arrays(np.cos(ang), np.sin(ang) * flatten, cs)


def norm_pairs(pairs) -> frozenset[frozenset[int]]:
    return frozenset(frozenset((int(a), int(b))) for a, b in pairs)


def interval_balanced_direct(inst: ColoredConvexInstance, i: int, j: int) -> bool:
    m = inst.m
    k = i
    bal = 0
    while True:
        bal += 1 if inst.colors[k] == RED else -1
        if k == j:
            break
        k = (k + 1) % m
    return bal == 0


def brute_o(inst: ColoredConvexInstance) -> list[int]:
    """o(i) by definition: first k in positive direction with opposite color
    and <i..k> balanced."""
    m = inst.m
    out = []
    for i in range(m):
        for off in range(1, m):
            k = (i + off) % m
            if inst.colors[k] != inst.colors[i] and interval_balanced_direct(inst, i, k):
                out.append(k)
                break
        else:
            raise AssertionError(f"no successor for {i}")
    return out


def _orient(inst, a: int, b: int, c: int) -> float:
    return (inst.xs[b] - inst.xs[a]) * (inst.ys[c] - inst.ys[a]) - (
        inst.ys[b] - inst.ys[a]
    ) * (inst.xs[c] - inst.xs[a])


def segments_properly_cross(inst: ColoredConvexInstance, p, q) -> bool:
    """Geometric proper-crossing test on the actual coordinates."""
    a, b = p
    c, d = q
    d1 = _orient(inst, a, b, c)
    d2 = _orient(inst, a, b, d)
    d3 = _orient(inst, c, d, a)
    d4 = _orient(inst, c, d, b)
    return d1 * d2 < 0 and d3 * d4 < 0


def enumerate_mono_matchings(m: int):
    """All non-crossing perfect matchings of m uncolored convex points."""

    def rec(seq):
        if not seq:
            yield []
            return
        u = seq[0]
        for t in range(1, len(seq), 2):
            for left in rec(seq[1:t]):
                for right in rec(seq[t + 1:]):
                    yield [(u, seq[t])] + left + right

    yield from rec(tuple(range(m)))


def mono_bottleneck_bruteforce(inst: ColoredConvexInstance) -> float:
    """Min bottleneck (squared) over all uncolored non-crossing matchings."""
    best = math.inf
    for matching in enumerate_mono_matchings(inst.m):
        v = max(dist_sq(inst, a, b) for a, b in matching)
        if v < best:
            best = v
    return best


def bichromatic_bottleneck_enum(inst: ColoredConvexInstance) -> float:
    """Min bottleneck (squared) over the exhaustive bichromatic enumeration."""
    from bbmatch.oracle import enumerate_all_matchings

    best = math.inf
    for matching in enumerate_all_matchings(inst):
        v = max(dist_sq(inst, a, b) for a, b in matching)
        if v < best:
            best = v
    return best


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def all_chords(m: int):
    return list(itertools.combinations(range(m), 2))
