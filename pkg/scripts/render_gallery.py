#!/usr/bin/env python3
"""Render a small SVG gallery: the named fixtures plus a few generated
instances, each with its optimal matching and orbit shading."""

import argparse
from pathlib import Path

from bbmatch.core_geometry import FIXTURES
from bbmatch.convex_solver import solve_convex
from bbmatch.gen import Coloring, GenSpec, Shape, generate
from bbmatch.orbits import compute_o
from bbmatch.render import render_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="gallery")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    scenes = [(name.lower(), make()) for name, make in FIXTURES.items()]
    scenes += [
        ("circle_random_n12", generate(GenSpec(n=12, shape=Shape.CIRCLE, seed=args.seed))),
        ("circle_alternating_n12",
         generate(GenSpec(n=12, shape=Shape.CIRCLE, coloring=Coloring.ALTERNATING, seed=args.seed))),
        ("convex_grouped_n10",
         generate(GenSpec(n=10, shape=Shape.CONVEX, coloring=Coloring.GROUPED, seed=args.seed))),
    ]
    for name, inst in scenes:
        orb = compute_o(inst)
        result = solve_convex(inst, orb)
        svg = render_svg(inst, matching=result.pairs, orbit_structure=orb, show_orbits=True)
        path = outdir / f"{name}.svg"
        path.write_text(svg)
        print(f"{path}  value={result.value:.6f}  pairs={len(result.pairs)}")


if __name__ == "__main__":
    main()
