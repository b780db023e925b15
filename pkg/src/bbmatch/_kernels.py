"""Jitted inner loops: orbit sweeps, the quadratic table fill, the search.

DP tables use a diagonal-major layout: row r holds every balanced interval
of length 2r+2, i.e. state (i, j) lives at [((j-i) mod m - 1) >> 1, i].
Filling row r touches only rows < r, and for alternating colorings (the
benchmark worst case) only row r-1, so the fill streams through memory.

All distance arithmetic stays in squared doubles computed as
dx*dx + dy*dy, matching the pure-Python oracle bit for bit.
"""

from __future__ import annotations

import numpy as np
from numba import njit

INF = np.inf


@njit(cache=True)
def orbit_stack_pass(colors, z):
    """Successor function o for every point, by two stack sweeps.

    Each sweep starts where the prefix balance is extremal (lowest index on
    ties), so the stack never underflows: the red pass pushes reds and pops
    one per blue, the blue pass swaps the roles.
    """
    m = colors.shape[0]
    o = np.empty(m, dtype=np.int64)
    stack = np.empty(m, dtype=np.int64)
    steps = 0

    for pushed in range(2):
        i0 = 0
        best = z[0]
        if pushed == 0:
            for i in range(m):
                steps += 1
                if z[i] < best:
                    best = z[i]
                    i0 = i
        else:
            for i in range(m):
                steps += 1
                if z[i] > best:
                    best = z[i]
                    i0 = i
        top = 0
        i = i0
        for _ in range(m):
            steps += 1
            if colors[i] == pushed:
                stack[top] = i
                top += 1
            else:
                top -= 1
                o[stack[top]] = i
            i += 1
            if i == m:
                i = 0
    return o, steps


@njit(cache=True)
def orbit_trace(o):
    """Invert o and walk out the orbit partition.

    Returns (o_inv, orbit_id, members, offsets, steps) where orbit g holds
    members[offsets[g]:offsets[g+1]], listed in traversal order from its
    lowest index.
    """
    m = o.shape[0]
    o_inv = np.empty(m, dtype=np.int64)
    for i in range(m):
        o_inv[o[i]] = i
    orbit_id = np.full(m, -1, dtype=np.int64)
    members = np.empty(m, dtype=np.int64)
    offsets = np.empty(m + 1, dtype=np.int64)
    pos = 0
    k = 0
    steps = m
    for i in range(m):
        if orbit_id[i] >= 0:
            continue
        offsets[k] = pos
        j = i
        while orbit_id[j] < 0:
            orbit_id[j] = k
            members[pos] = j
            pos += 1
            j = o[j]
            steps += 1
        k += 1
    offsets[k] = pos
    return o_inv, orbit_id, members[:pos], offsets[: k + 1], steps


@njit(cache=True)
def _inside_open_arc(x, s, e):
    # x strictly inside the open cyclic arc from s to e, positive direction
    if s < e:
        return s < x < e
    return x > s or x < e


@njit(cache=True)
def graph_scan(xs, ys, colors, o, o_inv, orbit_id, k):
    """One pass over consecutive point pairs: total-order successors,
    crossing arcs, and per-orbit longest red-blue / blue-red edges.

    A same-colored pair (i, i+1) witnesses consecutive orbits (blue-blue
    orders forward, red-red backward); those orbits cross iff the edges
    (i, o(i)) and (o^-1(i+1), i+1) interleave. Returns ok=False if two
    witnesses ever disagree, which would mean a broken total order.
    """
    m = colors.shape[0]
    succ = np.full(k, -1, dtype=np.int64)
    succ_g = np.full(k, -1, dtype=np.int64)
    rb = np.full(k, -INF)
    br = np.full(k, -INF)
    steps = 0
    ok = True
    for i in range(m):
        steps += 1
        p = o[i]
        dx = xs[i] - xs[p]
        dy = ys[i] - ys[p]
        d = dx * dx + dy * dy
        g = orbit_id[i]
        if colors[i] == 0:
            if d > rb[g]:
                rb[g] = d
        else:
            if d > br[g]:
                br[g] = d

        i1 = i + 1
        if i1 == m:
            i1 = 0
        if colors[i] != colors[i1]:
            continue
        h = orbit_id[i1]
        if colors[i] == 1:
            lo, hi = g, h
        else:
            lo, hi = h, g
        if succ[lo] >= 0 and succ[lo] != hi:
            ok = False
        succ[lo] = hi
        q = o_inv[i1]
        if _inside_open_arc(q, i, p) != _inside_open_arc(i1, i, p):
            succ_g[lo] = hi
    return succ, succ_g, rb, br, steps, ok


@njit(cache=True)
def fill_dp(xs, ys, col, o, oi, zz):
    """Fill S0/S1 over all balanced cyclic intervals, shortest first.

    S0(i,j): best edge-only matching of <i..j>; point i pairs with o(i), or
    with o^-1(i) when that lies inside the interval.
    S1(i,j): best single-cascade matching with the (i,j) side of the
    interval bounded by at most one diagonal; five cases (edge at i with
    S0/S1 split, edge at j with S0/S1 split, or the pair (i,j) itself).

    A pair is flagged necessary when it is an orbit edge or the S1 minimum
    is achieved only by matching (i,j) itself; the stricter variant accepts
    only forward edges (j = o(i)), whose five cases all force the pair.
    """
    m = xs.shape[0]
    half = m // 2
    s0 = np.full((half, m), INF)
    s1 = np.full((half, m), INF)
    nec_op = np.zeros((half, m), dtype=np.uint8)
    nec_def = np.zeros((half, m), dtype=np.uint8)
    ch0 = np.zeros((half, m), dtype=np.uint8)
    ch1 = np.zeros((half, m), dtype=np.uint8)
    scan = 0
    states = 0
    evals = 0

    for r in range(half):
        l = 2 * r + 1
        for i in range(m):
            scan += 1
            j = i + l
            if j >= m:
                j -= m
            j1 = j + 1
            if j1 == m:
                j1 = 0
            if zz[i] != zz[j1]:
                continue
            states += 1
            ip1 = i + 1
            if ip1 == m:
                ip1 = 0
            jm1 = j - 1
            if jm1 < 0:
                jm1 = m - 1

            # ---- S0 ----
            p = o[i]
            off_p = (p - i) % m
            dx = xs[i] - xs[p]
            dy = ys[i] - ys[p]
            v = dx * dx + dy * dy
            if off_p != 1:
                t = s0[(off_p - 3) >> 1, ip1]  # inner <i+1..p-1>
                if t > v:
                    v = t
            if p != j:
                pp1 = p + 1
                if pp1 == m:
                    pp1 = 0
                t = s0[(l - off_p - 2) >> 1, pp1]  # outer <p+1..j>
                if t > v:
                    v = t
            best0 = v
            c0 = 0
            q = oi[i]
            off_q = (q - i) % m
            if off_q <= l:
                dx = xs[i] - xs[q]
                dy = ys[i] - ys[q]
                w = dx * dx + dy * dy
                if off_q != 1:
                    t = s0[(off_q - 3) >> 1, ip1]
                    if t > w:
                        w = t
                if q != j:
                    qp1 = q + 1
                    if qp1 == m:
                        qp1 = 0
                    t = s0[(l - off_q - 2) >> 1, qp1]
                    if t > w:
                        w = t
                if w < best0:
                    best0 = w
                    c0 = 1
            s0[r, i] = best0
            ch0[r, i] = c0

            # ---- S1 ----
            dx = xs[i] - xs[p]
            dy = ys[i] - ys[p]
            base_i = dx * dx + dy * dy
            v0 = base_i
            v1 = base_i
            if off_p != 1:
                ri = (off_p - 3) >> 1
                t = s0[ri, ip1]
                if t > v0:
                    v0 = t
                t = s1[ri, ip1]
                if t > v1:
                    v1 = t
            if p != j:
                pp1 = p + 1
                if pp1 == m:
                    pp1 = 0
                ro = (l - off_p - 2) >> 1
                t = s1[ro, pp1]
                if t > v0:
                    v0 = t
                t = s0[ro, pp1]
                if t > v1:
                    v1 = t

            qj = oi[j]
            off_qj = (j - qj) % m
            dx = xs[qj] - xs[j]
            dy = ys[qj] - ys[j]
            base_j = dx * dx + dy * dy
            v2 = base_j
            v3 = base_j
            if off_qj != 1:
                qp1 = qj + 1
                if qp1 == m:
                    qp1 = 0
                ri = (off_qj - 3) >> 1
                t = s0[ri, qp1]
                if t > v2:
                    v2 = t
                t = s1[ri, qp1]
                if t > v3:
                    v3 = t
            if qj != i:
                ro = (l - off_qj - 2) >> 1
                t = s1[ro, i]
                if t > v2:
                    v2 = t
                t = s0[ro, i]
                if t > v3:
                    v3 = t

            feas = col[i] != col[j]
            v4 = INF
            if feas:
                dx = xs[i] - xs[j]
                dy = ys[i] - ys[j]
                v4 = dx * dx + dy * dy
                if l != 1:
                    t = s1[r - 1, ip1]
                    if t > v4:
                        v4 = t

            best1 = v0
            c1 = 0
            if v1 < best1:
                best1 = v1
                c1 = 1
            if v2 < best1:
                best1 = v2
                c1 = 2
            if v3 < best1:
                best1 = v3
                c1 = 3
            if v4 < best1:
                best1 = v4
                c1 = 4
            s1[r, i] = best1
            ch1[r, i] = c1
            evals += 5

            if feas:
                rest = v0
                if v1 < rest:
                    rest = v1
                if v2 < rest:
                    rest = v2
                if v3 < rest:
                    rest = v3
                only_last = v4 < rest
                fwd = p == j
                if fwd or o[j] == i or only_last:
                    nec_op[r, i] = 1
                if fwd or only_last:
                    nec_def[r, i] = 1

    return s0, s1, nec_op, nec_def, ch0, ch1, scan, states, evals


@njit(cache=True)
def search_best(s1, col, zz, nec, epre, tau_max, use_filter):
    """One-cascade scan plus the three-cascade search over candidate pairs.

    Tie-breaking is deterministic: strictly better values only, scanned in
    fixed order (wrap index ascending; then start ascending, interval
    length ascending, split ascending). Returns (value, kind, a, b, c,
    scanned, combos): kind 0 is a one-cascade optimum at wrap index a,
    kind 1 a three-cascade optimum with outer pair (a, b) and split c.
    """
    m = col.shape[0]
    half = m // 2
    best = INF
    kind = 0
    ba = -1
    bb = -1
    bc = -1
    for k in range(m):
        k1 = k + 1
        if k1 == m:
            k1 = 0
        if col[k] != col[k1]:
            v = s1[half - 1, k1]
            if v < best:
                best = v
                ba = k

    scanned = 0
    combos = 0
    total = epre[m]
    for i in range(m):
        for r in range(half - 1):  # l = m - 1 (the full cycle) is excluded
            l = 2 * r + 1
            scanned += 1
            j = i + l
            if j >= m:
                j -= m
            j1 = j + 1
            if j1 == m:
                j1 = 0
            if zz[i] != zz[j1]:
                continue
            if col[i] == col[j]:
                continue
            if use_filter:
                if nec[r, i] == 0:
                    continue
                a = i + 1
                if a >= m:
                    a -= m
                cnt = l - 1
                if cnt == 0:
                    tau = 0.0
                elif a + cnt <= m:
                    tau = epre[a + cnt] - epre[a]
                else:
                    tau = (total - epre[a]) + epre[a + cnt - m]
                if tau > tau_max:
                    continue
            s_ij = s1[r, i]
            if s_ij >= best:
                continue  # any combination reaches max(...) >= s_ij
            rem = m - l - 1
            for t in range(1, rem - 1, 2):
                combos += 1
                k = j1 + t
                if k >= m:
                    k -= m
                k1 = k + 1
                if k1 == m:
                    k1 = 0
                if zz[j1] != zz[k1]:
                    continue
                if col[j1] == col[k]:
                    continue
                v = s1[(t - 1) >> 1, j1]
                if v < s_ij:
                    v = s_ij
                w = s1[(rem - t - 3) >> 1, k1]
                if w > v:
                    v = w
                if v < best:
                    best = v
                    kind = 1
                    ba = i
                    bb = j
                    bc = k
    return best, kind, ba, bb, bc, scanned, combos
