"""Seed propagation, Wirtinger numbers and bridge-number labels.

Coloring a strand marks it as traceable from the seeds.  A crossing c
fires when the strand passing over it and the strand ending at its
under-entry are both colored; firing colors the strand that begins
there.  Once some set of k seeds saturates the whole code, k bounds the
first bridge number from above.  Firing order is irrelevant: the rule is
monotone, so the fixed point is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Final, Iterable, Sequence

from .codes import GaussCode, strands
from .errors import InconsistentBounds

__all__ = [
    "NOT_FOUND",
    "ColoringState",
    "BridgeBounds",
    "propagate",
    "wirtinger_number",
    "bridge_label",
]

NOT_FOUND: Final = None


@dataclass(frozen=True)
class ColoringState:
    """Saturated propagation result: colored strand indices, and whichever
    crossings could still fire (empty at a fixed point)."""

    colored: frozenset[int]
    frontier: frozenset[int]


def _crossing_strands(code: GaussCode) -> tuple[int, list[tuple[int, int, int]]]:
    """For each crossing, the (over, incoming, outgoing) strand indices."""
    e = code.entries
    m = len(e)
    sts = strands(code)
    if not e:
        return 1, []
    owner = [0] * m
    for idx, s in enumerate(sts):
        j = s.start_index
        while True:
            owner[j] = idx
            j = (j + 1) % m
            if j == s.end_index:
                break
    pos = {v: i for i, v in enumerate(e)}
    triples = []
    for c in range(1, code.crossings + 1):
        p, q = pos[c], pos[-c]
        triples.append((owner[p], owner[(q - 1) % m], owner[q]))
    return len(sts), triples


def propagate(code: GaussCode, seeds: Iterable[int]) -> ColoringState:
    """Color ``seeds`` and fire crossings to the unique fixed point."""
    n_strands, triples = _crossing_strands(code)
    seeds = set(seeds)
    if not seeds:
        raise ValueError("need at least one seed strand")
    if any(not 0 <= s < n_strands for s in seeds):
        raise ValueError(f"seed out of range 0..{n_strands - 1}")
    touch: list[list[int]] = [[] for _ in range(n_strands)]
    for idx, (over, inc, out) in enumerate(triples):
        touch[over].append(idx)
        touch[inc].append(idx)
    colored = set(seeds)
    stack = list(seeds)
    while stack:
        s = stack.pop()
        for idx in touch[s]:
            over, inc, out = triples[idx]
            if out not in colored and over in colored and inc in colored:
                colored.add(out)
                stack.append(out)
    frontier = frozenset(
        idx
        for idx, (over, inc, out) in enumerate(triples)
        if over in colored and inc in colored and out not in colored
    )
    return ColoringState(frozenset(colored), frontier)


def _saturates(
    triples_by_strand: list[list[int]],
    triples: list[tuple[int, int, int]],
    n_strands: int,
    seeds: tuple[int, ...],
) -> bool:
    colored = bytearray(n_strands)
    remaining = n_strands
    stack = list(seeds)
    for s in seeds:
        colored[s] = 1
        remaining -= 1
    while stack:
        if not remaining:
            return True
        s = stack.pop()
        for idx in triples_by_strand[s]:
            over, inc, out = triples[idx]
            if not colored[out] and colored[over] and colored[inc]:
                colored[out] = 1
                remaining -= 1
                stack.append(out)
    return remaining == 0


def wirtinger_number(
    code: GaussCode, k_start: int = 2, k_max: int | None = None
) -> int | None:
    """Smallest k in [k_start, k_max] whose best k-seed set saturates.

    Upper bound for the first bridge number.  Use ``k_start=2`` for
    classical codes and 1 for virtual ones.  ``k_max`` defaults to the
    strand count; subsets of each size are searched exhaustively with an
    early exit, so the result is the true minimum within the range.
    Returns :data:`NOT_FOUND` when no size in range saturates.  The empty
    code is the unknot and yields 1 by convention.
    """
    if k_start < 1:
        raise ValueError("k_start must be at least 1")
    if not code.entries:
        return 1
    n_strands, triples = _crossing_strands(code)
    k_hi = n_strands if k_max is None else min(k_max, n_strands)
    if k_start > k_hi:
        return NOT_FOUND
    touch: list[list[int]] = [[] for _ in range(n_strands)]
    for idx, (over, inc, out) in enumerate(triples):
        touch[over].append(idx)
        touch[inc].append(idx)
    for k in range(k_start, k_hi + 1):
        for seeds in combinations(range(n_strands), k):
            if _saturates(touch, triples, n_strands, seeds):
                return k
    return NOT_FOUND


@dataclass(frozen=True)
class BridgeBounds:
    """First-bridge-number bracket; ``exact`` iff the bounds meet."""

    lower: int
    upper: int | None
    exact: bool


def bridge_label(
    code: GaussCode,
    wirtinger_upper: int | None,
    coloring_lowers: Sequence[int] = (),
    external_exact_hint: bool | None = None,
    *,
    classical_census: bool = False,
    k_start: int = 1,
) -> BridgeBounds:
    """Combine the Wirtinger upper bound with coloring lower bounds.

    ``k_start`` doubles as the generic floor (2 for classical codes, 1
    for virtual).  For classical census codes an upper bound of 2 or 3 is
    already exact, 2-bridge knots being fully tabulated; that rule is
    gated behind ``classical_census``.  ``external_exact_hint`` marks
    rows whose upper bound was certified exact by outside data.
    """
    floor = 1 if not code.entries else k_start
    lower = max([floor, *coloring_lowers])
    upper = wirtinger_upper
    if upper is not None and lower > upper:
        raise InconsistentBounds(f"lower bound {lower} exceeds upper bound {upper}")
    if upper is not None and classical_census and upper in (2, 3):
        return BridgeBounds(upper, upper, True)
    if upper is not None and external_exact_hint:
        return BridgeBounds(upper, upper, True)
    return BridgeBounds(lower, upper, upper is not None and lower == upper)
