"""Independent reference implementations used to pin expected values.

Everything here recomputes results from first principles with different
algorithms than the package (full enumeration instead of propagation,
set-merging instead of traversal), so agreement is meaningful.
"""

from __future__ import annotations

import itertools
import random

from bridgekit.codes import GaussCode, SignedGaussCode, strands


def brute_force_colorings(code: SignedGaussCode, biq) -> list[tuple[int, ...]]:
    """All legitimate colorings by trying every assignment of every arc."""
    e = code.entries
    m = len(e)
    n = biq.order
    if m == 0:
        return [(v,) for v in range(1, n + 1)]
    pos = {v: i for i, v in enumerate(e)}
    crossings = []
    for c in range(1, m // 2 + 1):
        p, q = pos[c], pos[-c]
        crossings.append(((q - 1) % m, (p - 1) % m, q, p, code.signs[c - 1]))
    found = []
    for f in itertools.product(range(1, n + 1), repeat=m):
        ok = True
        for u_in, o_in, u_out, o_out, s in crossings:
            if s == 1:
                if (
                    f[u_out] != biq.over[f[u_in] - 1][f[o_in] - 1]
                    or f[o_out] != biq.under[f[o_in] - 1][f[u_in] - 1]
                ):
                    ok = False
                    break
            else:
                if (
                    f[u_in] != biq.over[f[u_out] - 1][f[o_out] - 1]
                    or f[o_in] != biq.under[f[o_out] - 1][f[u_out] - 1]
                ):
                    ok = False
                    break
        if ok:
            found.append(f)
    return found


def _crossing_triples(code: GaussCode):
    e = code.entries
    m = len(e)
    sts = strands(code)
    owner = [0] * m
    for idx, s in enumerate(sts):
        j = s.start_index
        while True:
            owner[j] = idx
            j = (j + 1) % m
            if j == s.end_index:
                break
    pos = {v: i for i, v in enumerate(e)}
    return len(sts), [
        (owner[pos[c]], owner[(pos[-c] - 1) % m], owner[pos[-c]])
        for c in range(1, m // 2 + 1)
    ]


def propagate_random_order(code: GaussCode, seeds, rng: random.Random) -> frozenset[int]:
    """Fixed point of coloring moves, firing eligible crossings in random order."""
    n_strands, triples = _crossing_triples(code)
    colored = set(seeds)
    while True:
        eligible = [
            i
            for i, (over, inc, out) in enumerate(triples)
            if over in colored and inc in colored and out not in colored
        ]
        if not eligible:
            return frozenset(colored)
        over, inc, out = triples[rng.choice(eligible)]
        colored.add(out)


def exhaustive_wirtinger(code: GaussCode) -> int:
    """Smallest seed-set size that saturates, over all subsets of all sizes."""
    n_strands, triples = _crossing_triples(code)
    rng = random.Random(0)
    for k in range(1, n_strands + 1):
        for seeds in itertools.combinations(range(n_strands), k):
            if len(propagate_random_order(code, seeds, rng)) == n_strands:
                return k
    return n_strands


def brute_bracket(code: SignedGaussCode) -> dict[int, int]:
    """Bracket coefficients by enumerating states and merging loop sets.

    The A-smoothing of a +1 crossing joins under-in to over-out (it keeps
    the traversal direction); for a -1 crossing the roles swap.
    """
    e = code.entries
    m = len(e)
    c = m // 2
    if c == 0:
        return {0: 1}
    pos = {v: i for i, v in enumerate(e)}
    joins = []
    for lab in range(1, c + 1):
        p, q = pos[lab], pos[-lab]
        over_in = (2 * ((p - 1) % m), 1)
        over_out = (2 * p, 0)
        under_in = (2 * ((q - 1) % m), 1)
        under_out = (2 * q, 0)
        # identify arc ends by (2*arc, side); side 0 = left (at entry i)
        def end(pair):
            base, side = pair
            return base + side
        oriented = ((end(under_in), end(over_out)), (end(over_in), end(under_out)))
        crossed = ((end(under_in), end(over_in)), (end(under_out), end(over_out)))
        joins.append((oriented, crossed) if code.signs[lab - 1] == 1 else (crossed, oriented))
    coeffs: dict[int, int] = {}
    for state in itertools.product((0, 1), repeat=c):
        groups = {frozenset((2 * a, 2 * a + 1)) for a in range(m)}
        def merge(x, y):
            gx = next(g for g in groups if x in g)
            gy = next(g for g in groups if y in g)
            if gx is gy:
                return
            groups.remove(gx)
            groups.remove(gy)
            groups.add(gx | gy)
        for t, pick in enumerate(state):
            for e1, e2 in joins[t][pick]:
                merge(e1, e2)
        loops = len(groups)
        a_count = c - sum(state)
        exp_shift = a_count - (c - a_count)
        # multiply delta^(loops-1) with delta = -A^2 - A^-2
        poly = {0: 1}
        for _ in range(loops - 1):
            nxt: dict[int, int] = {}
            for ex, co in poly.items():
                nxt[ex + 2] = nxt.get(ex + 2, 0) - co
                nxt[ex - 2] = nxt.get(ex - 2, 0) - co
            poly = nxt
        for ex, co in poly.items():
            key = ex + exp_shift
            coeffs[key] = coeffs.get(key, 0) + co
    return {k: v for k, v in coeffs.items() if v}


def brute_jones(code: SignedGaussCode) -> dict[int, int]:
    w = sum(code.signs)
    sign = -1 if w % 2 else 1
    return {k - 3 * w: sign * v for k, v in brute_bracket(code).items()}
