"""Bottleneck bichromatic non-crossing matchings of convex point sets.

Quadratic-time solver for points in convex position, linear-time solver for
points on a circle, plus an independent cubic oracle, exhaustive
enumeration, generators, a verifier, and an SVG renderer.
"""

from .circle_solver import ComponentPlan, NotOnCircle, component_plan, solve_circle
from .convex_solver import (
    CandidateSet,
    DPTables,
    compute_dp,
    edge_only_matching,
    enumerate_candidates,
    reconstruct,
    solve_convex,
    solve_monochromatic,
)
from .core_geometry import (
    BLUE,
    RED,
    Color,
    ColoredConvexInstance,
    ColoredPoint,
    CyclicInterval,
    DuplicatePoint,
    InstanceError,
    MatchingResult,
    NotStrictlyConvex,
    OddCount,
    SharedEndpoint,
    UnbalancedColors,
    chords_cross,
    dist_sq,
    fixture_hex6,
    fixture_oct8,
    fixture_rrbb4,
    fixture_sq4,
    format_instance_json,
    format_instance_text,
    is_balanced,
    parse_instance,
    parse_instance_json,
    parse_instance_text,
    turning_angle,
    validate_instance,
)
from .gen import Coloring, GenSpec, Shape, generate
from .oracle import (
    NotADiagonal,
    Polarity,
    TooLarge,
    VerificationReport,
    any_matching,
    enumerate_all_matchings,
    oracle_dp,
    polarity_check,
    verify_matching,
)
from .orbits import (
    EdgeKind,
    Incomparable,
    OrbitEdge,
    OrbitGraph,
    OrbitStructure,
    PairClass,
    build_orbit_graph,
    classify_pair,
    compare_orbits_bruteforce,
    compute_o,
    is_feasible,
)
from .render import render_svg

__version__ = "0.1.0"
