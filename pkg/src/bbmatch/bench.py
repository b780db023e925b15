"""Wall-time and step-count benchmarks for the solvers.

Reports scaling fits rather than absolute times: the convex solver should
trend quadratically, orbit construction and the circle solver linearly.
Convex timings use alternating colorings, which make every even interval
balanced and pin the DP at its full quadratic state count.
"""

from __future__ import annotations

import math
import statistics
import time
from dataclasses import dataclass, field

from .circle_solver import solve_circle
from .convex_solver import solve_convex
from .gen import Coloring, GenSpec, Shape, generate
from .oracle import oracle_dp
from .orbits import compute_o

MODES = ("convex", "circle", "orbits", "oracle")


@dataclass
class BenchEntry:
    mode: str
    n: int  # pairs; instance size is 2n
    times: list[float]
    steps: int | None = None

    @property
    def median_s(self) -> float:
        return statistics.median(self.times)

    @property
    def min_s(self) -> float:
        return min(self.times)


@dataclass
class BenchReport:
    entries: list[BenchEntry] = field(default_factory=list)
    exponents: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "entries": [
                {
                    "mode": e.mode,
                    "n": e.n,
                    "times": e.times,
                    "median_s": e.median_s,
                    "min_s": e.min_s,
                    "steps": e.steps,
                }
                for e in self.entries
            ],
            "exponents": self.exponents,
        }


def _instance_for(mode: str, n: int, seed: int):
    coloring = Coloring.ALTERNATING if mode in ("convex", "oracle") else Coloring.RANDOM_BALANCED
    return generate(GenSpec(n=n, shape=Shape.CIRCLE, coloring=coloring, seed=seed))


def _run(mode: str, inst):
    if mode == "convex":
        r = solve_convex(inst)
        return r.stats["dp_states"] if r.stats else None
    if mode == "circle":
        r = solve_circle(inst)
        return r.stats["steps"] if r.stats else None
    if mode == "orbits":
        return compute_o(inst).steps
    if mode == "oracle":
        oracle_dp(inst)
        return None
    raise ValueError(f"unknown mode {mode!r}")


def fitted_exponent(sizes, medians) -> float:
    """Least-squares slope of log(time) against log(n)."""
    lx = [math.log(s) for s in sizes]
    ly = [math.log(max(t, 1e-9)) for t in medians]
    mx = sum(lx) / len(lx)
    my = sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den if den else float("nan")


def bench(sizes, repeats: int = 3, modes=("convex", "circle"), seed: int = 0) -> BenchReport:
    sizes = list(sizes)
    if repeats < 3:
        raise ValueError("need repeats >= 3")
    if any(b <= a for a, b in zip(sizes, sizes[1:])) or not sizes:
        raise ValueError("sizes must be strictly increasing and non-empty")
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")

    report = BenchReport()
    for mode in modes:
        # Warm up on the smallest size so JIT compilation stays out of timings.
        _run(mode, _instance_for(mode, sizes[0], seed))
        medians = []
        for n in sizes:
            inst = _instance_for(mode, n, seed + n)
            times = []
            steps = None
            for _ in range(repeats):
                t0 = time.perf_counter()
                steps = _run(mode, inst)
                times.append(time.perf_counter() - t0)
            entry = BenchEntry(mode, n, times, steps)
            report.entries.append(entry)
            medians.append(entry.median_s)
        report.exponents[mode] = fitted_exponent(sizes, medians)
    return report
