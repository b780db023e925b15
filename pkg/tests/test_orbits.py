import functools
import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from bbmatch.core_geometry import RED, CyclicInterval, chords_cross, is_balanced
from bbmatch.gen import Coloring, Shape
from bbmatch.orbits import (
    EdgeKind,
    PairClass,
    build_orbit_graph,
    classify_pair,
    compare_orbits_bruteforce,
    compute_o,
    directed_edges,
    is_feasible,
    orbits_cross_bruteforce,
)

from helpers import brute_o, random_instance

st_instances = st.builds(
    random_instance,
    n=st.integers(1, 9),
    seed=st.integers(0, 10**6),
    shape=st.sampled_from([Shape.CIRCLE, Shape.CONVEX]),
    coloring=st.sampled_from(list(Coloring)),
)


class TestComputeO:
    def test_sq4_golden(self, sq4):
        orb = compute_o(sq4)
        assert orb.o.tolist() == [1, 2, 3, 0]
        assert orb.orbits == ((0, 1, 2, 3),)

    def test_rrbb4_golden(self, rrbb4):
        orb = compute_o(rrbb4)
        assert orb.o.tolist() == [3, 2, 1, 0]
        assert orb.orbits == ((0, 3), (1, 2))

    def test_hex6_golden(self, hex6):
        orb = compute_o(hex6)
        assert orb.o.tolist() == [1, 4, 3, 2, 5, 0]
        assert orb.orbits == ((0, 1, 4, 5), (2, 3))

    def test_oct8_golden(self, oct8):
        orb = compute_o(oct8)
        assert orb.o.tolist() == [1, 4, 3, 6, 5, 0, 7, 2]
        assert orb.o_inv.tolist() == [5, 0, 7, 2, 1, 4, 3, 6]
        assert orb.orbits == ((0, 1, 4, 5), (2, 3, 6, 7))

    @given(st_instances)
    @settings(max_examples=80, deadline=None)
    def test_matches_definition_scan(self, inst):
        orb = compute_o(inst)
        assert orb.o.tolist() == brute_o(inst)

    @given(st_instances)
    @settings(max_examples=60, deadline=None)
    def test_bijection_and_partition(self, inst):
        orb = compute_o(inst)
        m = inst.m
        assert sorted(orb.o.tolist()) == list(range(m))
        for i in range(m):
            assert orb.o_inv[orb.o[i]] == i
            assert orb.o[orb.o_inv[i]] == i
        seen = sorted(x for members in orb.orbits for x in members)
        assert seen == list(range(m))

    @given(st_instances)
    @settings(max_examples=60, deadline=None)
    def test_orbit_properties(self, inst):
        orb = compute_o(inst)
        for members in orb.orbits:
            # balanced, with alternating colors along the traversal
            reds = sum(1 for x in members if inst.colors[x] == RED)
            assert 2 * reds == len(members)
            for a, b in zip(members, members[1:]):
                assert inst.colors[a] != inst.colors[b]
            # single turn: traversal from the lowest index is monotone CCW
            assert list(members) == sorted(members)

    def test_linear_step_bound(self):
        for n in (10, 1000):
            inst = random_instance(n, seed=n)
            orb = compute_o(inst)
            assert orb.steps <= 8 * inst.m


class TestFeasibility:
    def test_examples(self, sq4, rrbb4, oct8):
        for inst, i, j, want in [
            (rrbb4, 0, 3, True),
            (rrbb4, 0, 2, False),
            (sq4, 0, 1, True),
            (sq4, 0, 2, False),
            (oct8, 1, 6, False),
        ]:
            orb = compute_o(inst)
            assert is_feasible(inst, orb, i, j) == want

    @given(st_instances)
    @settings(max_examples=60, deadline=None)
    def test_equivalence_with_direct_test(self, inst):
        orb = compute_o(inst)
        for i in range(inst.m):
            for j in range(inst.m):
                if i == j:
                    continue
                direct = inst.colors[i] != inst.colors[j] and is_balanced(
                    inst, CyclicInterval(i, j)
                )
                assert is_feasible(inst, orb, i, j) == direct

    @given(st_instances)
    @settings(max_examples=40, deadline=None)
    def test_feasible_pair_splits_every_orbit_evenly(self, inst):
        orb = compute_o(inst)
        m = inst.m
        for i in range(m):
            for j in range(m):
                if i == j or not is_feasible(inst, orb, i, j):
                    continue
                iv = CyclicInterval(i, j)
                for members in orb.orbits:
                    reds = blues = 0
                    for x in members:
                        if iv.contains(x, m):
                            if inst.colors[x] == RED:
                                reds += 1
                            else:
                                blues += 1
                    assert reds == blues


class TestClassifyPair:
    def test_examples(self, sq4, oct8):
        assert classify_pair(compute_o(sq4), 0, 3) is PairClass.EDGE
        assert classify_pair(compute_o(oct8), 1, 0) is PairClass.EDGE
        alt12 = random_instance(6, seed=0, coloring=Coloring.ALTERNATING)
        orb = compute_o(alt12)
        assert classify_pair(orb, 0, 3) is PairClass.DIAGONAL

    def test_infeasible(self, sq4, oct8):
        assert classify_pair(compute_o(sq4), 0, 2) is PairClass.INFEASIBLE
        assert classify_pair(compute_o(oct8), 1, 6) is PairClass.INFEASIBLE


class TestOrbitEdges:
    def test_kinds_and_two_orbit_double_edges(self, rrbb4):
        orb = compute_o(rrbb4)
        edges = directed_edges(rrbb4, orb)
        kinds = {(e.start, e.end): e.kind for e in edges}
        assert kinds[(0, 3)] is EdgeKind.RED_BLUE
        assert kinds[(3, 0)] is EdgeKind.BLUE_RED
        assert kinds[(1, 2)] is EdgeKind.RED_BLUE
        assert kinds[(2, 1)] is EdgeKind.BLUE_RED

    @given(st_instances)
    @settings(max_examples=40, deadline=None)
    def test_same_type_edges_never_cross_across_orbits(self, inst):
        orb = compute_o(inst)
        edges = directed_edges(inst, orb)
        for a, b in itertools.combinations(edges, 2):
            if orb.orbit_id[a.start] == orb.orbit_id[b.start]:
                continue
            if a.kind is not b.kind:
                continue
            pa = (a.start, a.end)
            pb = (b.start, b.end)
            if set(pa) & set(pb):
                continue
            assert not chords_cross(pa, pb)


class TestOrbitGraph:
    def test_hex6_nested_orbits(self, hex6):
        orb = compute_o(hex6)
        g = build_orbit_graph(hex6, orb)
        assert g.succ == (1, None)
        assert g.succ_g == (None, None)
        assert g.components == ((0,), (1,))

    def test_oct8_single_component(self, oct8):
        orb = compute_o(oct8)
        g = build_orbit_graph(oct8, orb)
        assert g.order == (0, 1)
        assert g.succ_g == (1, None)
        assert g.components == ((0, 1),)

    def test_sq4_singleton(self, sq4):
        orb = compute_o(sq4)
        g = build_orbit_graph(sq4, orb)
        assert g.components == ((0,),)

    def test_rrbb4_order(self, rrbb4):
        orb = compute_o(rrbb4)
        g = build_orbit_graph(rrbb4, orb)
        # orbit 1 = {1, 2} precedes orbit 0 = {0, 3}
        assert g.order == (1, 0)

    def test_boundary_color_rule(self):
        for seed in range(30):
            inst = random_instance(7, seed)
            orb = compute_o(inst)
            for i in range(inst.m):
                j = (i + 1) % inst.m
                same_orbit = orb.orbit_id[i] == orb.orbit_id[j]
                same_color = inst.colors[i] == inst.colors[j]
                assert same_orbit != same_color

    @given(st_instances)
    @settings(max_examples=40, deadline=None)
    def test_brute_force_order_agrees(self, inst):
        orb = compute_o(inst)
        g = build_orbit_graph(inst, orb)
        k = orb.num_orbits
        cmp = functools.cmp_to_key(
            lambda a, b: 0 if a == b else compare_orbits_bruteforce(inst, orb, a, b)
        )
        assert tuple(sorted(range(k), key=cmp)) == g.order

    @given(st_instances)
    @settings(max_examples=40, deadline=None)
    def test_components_match_brute_force_weak_components(self, inst):
        orb = compute_o(inst)
        g = build_orbit_graph(inst, orb)
        k = orb.num_orbits
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in itertools.combinations(range(k), 2):
            if orbits_cross_bruteforce(orb, a, b):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        brute = {}
        for x in range(k):
            brute.setdefault(find(x), []).append(x)
        assert sorted(sorted(v) for v in brute.values()) == sorted(
            sorted(c) for c in g.components
        )

    @given(st_instances)
    @settings(max_examples=40, deadline=None)
    def test_hamiltonian_paths_partition_the_order(self, inst):
        orb = compute_o(inst)
        g = build_orbit_graph(inst, orb)
        flattened = tuple(x for comp in g.components for x in comp)
        assert flattened == g.order

    @given(st_instances)
    @settings(max_examples=30, deadline=None)
    def test_forbidden_subgraph(self, inst):
        orb = compute_o(inst)
        g = build_orbit_graph(inst, orb)
        k = orb.num_orbits
        pos = {x: t for t, x in enumerate(g.order)}
        arcs = set()
        for a, b in itertools.combinations(range(k), 2):
            if orbits_cross_bruteforce(orb, a, b):
                arcs.add((a, b) if pos[a] < pos[b] else (b, a))
        out = {}
        into = {}
        for a, b in arcs:
            out.setdefault(a, []).append(b)
            into.setdefault(b, []).append(a)
        for sibs in list(out.values()) + list(into.values()):
            for x, y in itertools.combinations(sibs, 2):
                assert (x, y) in arcs or (y, x) in arcs

    def test_rb_br_maxima(self, oct8):
        from bbmatch.core_geometry import RED, dist_sq

        orb = compute_o(oct8)
        g = build_orbit_graph(oct8, orb)
        for gid in range(orb.num_orbits):
            members = orb.orbit_members(gid).tolist()
            rb = max(dist_sq(oct8, i, int(orb.o[i])) for i in members if oct8.colors[i] == RED)
            br = max(dist_sq(oct8, i, int(orb.o[i])) for i in members if oct8.colors[i] != RED)
            assert g.rb_max_sq[gid] == rb
            assert g.br_max_sq[gid] == br
        # orbit A: short red-blue sides, long blue-red chords; B mirrored
        assert g.rb_max_sq[0] < g.br_max_sq[0]
        assert g.rb_max_sq[1] > g.br_max_sq[1]

    def test_linear_step_bound(self):
        inst = random_instance(2000, seed=1, shape=Shape.CIRCLE)
        orb = compute_o(inst)
        g = build_orbit_graph(inst, orb)
        assert g.steps <= 8 * inst.m


class TestBruteForceComparator:
    def test_spec_examples(self, hex6, oct8, rrbb4):
        for inst in (hex6, oct8):
            orb = compute_o(inst)
            assert compare_orbits_bruteforce(inst, orb, 0, 1) == -1
        orb = compute_o(rrbb4)
        # {1, 2} precedes {0, 3}
        assert compare_orbits_bruteforce(rrbb4, orb, 1, 0) == -1
        assert compare_orbits_bruteforce(rrbb4, orb, 0, 1) == 1

    def test_total_order_axioms_small(self):
        for seed in range(10):
            inst = random_instance(15, seed, coloring=Coloring.RANDOM_BALANCED)
            orb = compute_o(inst)
            k = orb.num_orbits
            rel = {}
            for a, b in itertools.permutations(range(k), 2):
                rel[(a, b)] = compare_orbits_bruteforce(inst, orb, a, b)
            for a, b in itertools.permutations(range(k), 2):
                assert rel[(a, b)] == -rel[(b, a)]
            for a, b, c in itertools.permutations(range(k), 3):
                if rel[(a, b)] == -1 and rel[(b, c)] == -1:
                    assert rel[(a, c)] == -1
