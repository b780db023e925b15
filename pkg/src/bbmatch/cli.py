"""Command-line interface: gen, solve, verify, orbits, bench, render.

Exit codes: 0 success, 2 validation error (bad instance or failed
verification), 3 mode-precondition error (e.g. circle mode on non-circle
input), 4 internal invariant failure. BBMATCH_SEED overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .bench import MODES as BENCH_MODES
from .bench import bench
from .circle_solver import NotOnCircle, solve_circle
from .convex_solver import InternalError, solve_convex, solve_monochromatic
from .core_geometry import (
    ColoredConvexInstance,
    InstanceError,
    MatchingResult,
    format_instance_json,
    format_instance_text,
    parse_instance,
)
from .gen import Coloring, GenSpec, Shape, generate
from .oracle import oracle_dp, verify_matching
from .orbits import Incomparable, build_orbit_graph, compute_o
from .render import render_svg

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_instance(path: str) -> ColoredConvexInstance:
    return parse_instance(_read_text(path))


def _seed(args) -> int:
    env = os.environ.get("BBMATCH_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _result_json(result: MatchingResult, mode: str) -> str:
    return json.dumps(
        {
            "mode": mode,
            "n": len(result.pairs),
            "value": result.value,
            "value_sq": result.value_sq,
            "pairs": [[int(a), int(b)] for a, b in result.pairs],
        }
    )


def cmd_gen(args) -> int:
    spec = GenSpec(
        n=args.n,
        shape=Shape(args.shape),
        coloring=Coloring(args.coloring),
        seed=_seed(args),
    )
    inst = generate(spec)
    text = format_instance_json(inst) + "\n" if args.format == "json" else format_instance_text(inst)
    _write_text(args.output, text)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = _load_instance(args.input)
    if args.mono:
        result = solve_monochromatic(np.stack([inst.xs, inst.ys], axis=1))
    elif args.mode == "convex":
        result = solve_convex(inst)
    elif args.mode == "circle":
        result = solve_circle(inst)
    else:
        result = oracle_dp(inst)

    if args.emit_matching:
        _write_text(args.emit_matching, _result_json(result, args.mode) + "\n")
    if args.output == "json":
        _write_text(None, _result_json(result, args.mode) + "\n")
    else:
        lines = [f"mode: {args.mode}", f"value: {result.value!r}", f"value_sq: {result.value_sq!r}"]
        lines += [f"{a} {b}" for a, b in result.pairs]
        _write_text(None, "\n".join(lines) + "\n")
    return EXIT_OK


def _load_pairs(path: str) -> list[tuple[int, int]]:
    obj = json.loads(_read_text(path))
    if isinstance(obj, dict):
        obj = obj["pairs"]
    return [(int(a), int(b)) for a, b in obj]


def cmd_verify(args) -> int:
    inst = _load_instance(args.input)
    report = verify_matching(inst, _load_pairs(args.matching))
    out = {
        "ok": report.ok,
        "violations": report.violations,
        "value": report.value,
        "value_sq": report.value_sq,
    }
    _write_text(None, json.dumps(out) + "\n")
    return EXIT_OK if report.ok else EXIT_VALIDATION


def cmd_orbits(args) -> int:
    inst = _load_instance(args.input)
    orb = compute_o(inst)
    graph = build_orbit_graph(inst, orb)
    out = {
        "o": orb.o.tolist(),
        "o_inv": orb.o_inv.tolist(),
        "orbit_id": orb.orbit_id.tolist(),
        "orbits": [list(members) for members in orb.orbits],
        "succ": list(graph.succ),
        "order": list(graph.order),
        "components": [list(c) for c in graph.components],
        "rb_max_sq": [None if v == float("-inf") else v for v in graph.rb_max_sq],
        "br_max_sq": [None if v == float("-inf") else v for v in graph.br_max_sq],
    }
    _write_text(args.output, json.dumps(out) + "\n")
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",")]
    modes = args.modes.split(",")
    report = bench(sizes, repeats=args.repeats, modes=modes, seed=_seed(args))
    if args.output == "json":
        _write_text(None, json.dumps(report.as_dict()) + "\n")
    else:
        lines = [f"{'mode':<8} {'n':>9} {'median_s':>12} {'min_s':>12} {'steps':>14}"]
        for e in report.entries:
            steps = "-" if e.steps is None else str(e.steps)
            lines.append(f"{e.mode:<8} {e.n:>9} {e.median_s:>12.6f} {e.min_s:>12.6f} {steps:>14}")
        for mode, exp in report.exponents.items():
            lines.append(f"fitted exponent[{mode}] = {exp:.3f}")
        _write_text(None, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_render(args) -> int:
    inst = _load_instance(args.input)
    matching = _load_pairs(args.matching) if args.matching else None
    svg = render_svg(inst, matching=matching, show_orbits=args.orbits)
    _write_text(args.output, svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bbmatch",
        description="Bottleneck bichromatic non-crossing matchings in convex position.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True, help="number of pairs (2n points)")
    p.add_argument("--shape", choices=[s.value for s in Shape], default="circle")
    p.add_argument("--coloring", choices=[c.value for c in Coloring], default="random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--mode", choices=["convex", "circle", "oracle"], default="convex")
    p.add_argument("--mono", action="store_true",
                   help="ignore input colors and solve the uncolored problem")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.add_argument("--emit-matching", default=None, metavar="PATH")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="verify a matching file against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--matching", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="dump the orbit structure and orbit graph")
    p.add_argument("--input", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("bench", help="time the solvers and fit scaling exponents")
    p.add_argument("--sizes", default="250,500,1000", help="comma-separated n values")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--modes", default="convex,circle",
                   help=f"comma-separated subset of {','.join(BENCH_MODES)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("render", help="render an instance (and matching) to SVG")
    p.add_argument("--input", required=True)
    p.add_argument("--matching", default=None)
    p.add_argument("--orbits", action="store_true", help="shade orbits")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, FileNotFoundError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NotOnCircle as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InternalError, Incomparable, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
