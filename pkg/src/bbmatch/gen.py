"""Seeded instance generators for tests and benchmarks."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .core_geometry import ColoredConvexInstance, InstanceError, instance_from_arrays


class Shape(enum.Enum):
    CIRCLE = "circle"
    CONVEX = "convex"


class Coloring(enum.Enum):
    RANDOM_BALANCED = "random"
    ALTERNATING = "alternating"
    GROUPED = "grouped"


@dataclass(frozen=True)
class GenSpec:
    n: int  # pairs; the instance has 2n points
    shape: Shape = Shape.CIRCLE
    coloring: Coloring = Coloring.RANDOM_BALANCED
    seed: int = 0


def _colors(m: int, coloring: Coloring, rng: np.random.Generator) -> np.ndarray:
    n = m // 2
    if coloring is Coloring.ALTERNATING:
        return (np.arange(m) % 2).astype(np.uint8)
    if coloring is Coloring.GROUPED:
        return np.repeat(np.array([0, 1], dtype=np.uint8), n)
    return rng.permutation(np.repeat(np.array([0, 1], dtype=np.uint8), n))


def _circle_coords(m: int, rng: np.random.Generator):
    # Jittered angular grid: sorted, CCW, with the minimum gap bounded below
    # by 0.1 * 2*pi/m (>= 1e-9 for any practical m). Raw sorted uniforms
    # violate a 1e-9 gap with high probability already around m ~ 1e5.
    jitter = rng.random(m) * 0.9
    theta = 2.0 * np.pi * (np.arange(m) + jitter) / m + rng.random() * 2.0 * np.pi
    return np.cos(theta), np.sin(theta)


def _valtr_coords(m: int, rng: np.random.Generator):
    """Random convex polygon by the random-vector resorting construction."""
    xs = np.sort(rng.random(m))
    ys = np.sort(rng.random(m))

    def chain_diffs(vals: np.ndarray) -> np.ndarray:
        first, last = vals[0], vals[-1]
        top_prev = first
        bot_prev = first
        diffs = np.empty(m)
        idx = 0
        for v in vals[1:-1]:
            if rng.random() < 0.5:
                diffs[idx] = v - top_prev
                top_prev = v
            else:
                diffs[idx] = bot_prev - v
                bot_prev = v
            idx += 1
        diffs[idx] = last - top_prev
        diffs[idx + 1] = bot_prev - last
        return diffs

    dx = chain_diffs(xs)
    dy = chain_diffs(ys)
    rng.shuffle(dy)
    ang = np.arctan2(dy, dx)
    order = np.argsort(ang, kind="stable")
    px = np.cumsum(dx[order])
    py = np.cumsum(dy[order])
    return px - px.mean(), py - py.mean()


def generate(spec: GenSpec) -> ColoredConvexInstance:
    """Deterministic in the seed; the result always validates."""
    if spec.n < 1:
        raise ValueError("need n >= 1")
    m = 2 * spec.n
    rng = np.random.default_rng(spec.seed)
    colors = _colors(m, spec.coloring, rng)
    for _ in range(100):
        if spec.shape is Shape.CIRCLE:
            xs, ys = _circle_coords(m, rng)
        else:
            xs, ys = _valtr_coords(m, rng)
        try:
            return instance_from_arrays(xs, ys, colors)
        except InstanceError:
            continue  # collinear/duplicate draw; vanishing probability
    raise AssertionError("generator failed to produce a valid instance")
