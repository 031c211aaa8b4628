"""Finite quandles/biquandles and the coloring-count invariant.

An order-n biquandle is a pair of n x n operation tables with values in
1..n, read at row x, column y: ``over`` stores x ⊳̄ y, the result of x
being acted on by a strand carrying y that passes *over* it, and
``under`` stores x ⊳̲ y, the action of a strand passing *under*.  A
quandle is the special case where the under-action is trivial; its
single operation then lives in the under table by convention, so the
strand being crossed over keeps its color.

Colorings assign an element to each short arc of a signed Gauss code
(arc i sits between entries i and i+1, cyclically).  At a crossing of
sign +1 with incoming under-arc x and incoming over-arc y, the outgoing
under-arc carries x ⊳̄ y and the outgoing over-arc y ⊳̲ x; at sign -1 the
same map is read against the traversal, i.e. it takes the outgoing pair
to the incoming one.  The number of legitimate colorings is invariant
under the rewrite moves and bounds bridge numbers from below:
n^b >= count, with b the first bridge number for quandles and the second
for biquandles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .codes import SignedGaussCode, connected_sum
from .errors import (
    AxiomViolation,
    CodeError,
    DegenerateOrder,
    OutOfRangeEntry,
    ShapeMismatch,
)

__all__ = [
    "Biquandle",
    "AxiomReport",
    "AxiomFailure",
    "verify_axioms",
    "biquandle",
    "quandle",
    "dihedral_quandle",
    "lookup_over",
    "lookup_under",
    "count_colorings",
    "coloring_lower_bound",
    "kishino_family",
    "load_table_file",
    "DIHEDRAL_3",
    "BIQUANDLE_4",
    "TREFOIL",
    "KISHINO",
]

Table = tuple[tuple[int, ...], ...]


def _freeze(table: Iterable[Iterable[int]]) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


def _check_shape(over: Table, under: Table) -> int:
    n = len(over)
    if n == 0 or len(under) != n:
        raise ShapeMismatch(f"need two n x n tables, got {len(over)} and {len(under)} rows")
    for tab, name in ((over, "over"), (under, "under")):
        for i, row in enumerate(tab):
            if len(row) != n:
                raise ShapeMismatch(f"{name} row {i + 1} has {len(row)} entries, want {n}")
            for v in row:
                if not 1 <= v <= n:
                    raise OutOfRangeEntry(f"{name}[{i + 1}] contains {v}, want 1..{n}")
    return n


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    elements: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AxiomReport:
    order: int
    failures: tuple[AxiomFailure, ...]

    @property
    def valid(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        if self.valid:
            return f"valid (order {self.order})"
        lines = [f"{len(self.failures)} violation(s) (order {self.order}):"]
        lines += [f"  {f.axiom} at {f.elements}: {f.detail}" for f in self.failures]
        return "\n".join(lines)


def verify_axioms(over_table: Sequence[Sequence[int]], under_table: Sequence[Sequence[int]]) -> AxiomReport:
    """Check the biquandle axioms; an empty report means the tables qualify.

    The axioms are exactly the conditions making the coloring count
    blind to the three rewrite moves:

    * kink: for each b there is a unique m with m = b ⊳̄ m and m ⊳̲ b = b,
      and a unique m with m = b ⊳̲ m and m ⊳̄ b = b (one per kink variant);
    * slide: every column of both tables is a permutation and the pair
      map S(x, y) = (y ⊳̄ x, x ⊳̲ y) is a bijection on pairs;
    * exchange, from the triple-crossing rewrite:
      (x⊳̲y)⊳̲z          == (x ⊳̲ (z⊳̄y)) ⊳̲ (y⊳̲z)
      (y⊳̄x)⊳̲(z⊳̄(x⊳̲y)) == (y⊳̲z) ⊳̄ (x ⊳̲ (z⊳̄y))
      (z⊳̄(x⊳̲y))⊳̄(y⊳̄x) == (z⊳̄y) ⊳̄ x.

    Raises :class:`ShapeMismatch`/:class:`OutOfRangeEntry` for tables that
    are not even candidate operation tables.
    """
    over = _freeze(over_table)
    under = _freeze(under_table)
    n = _check_shape(over, under)
    fails: list[AxiomFailure] = []

    def ov(x: int, y: int) -> int:
        return over[x - 1][y - 1]

    def un(x: int, y: int) -> int:
        return under[x - 1][y - 1]

    rng = range(1, n + 1)
    for b in rng:
        hits = [m for m in rng if ov(b, m) == m and un(m, b) == b]
        if len(hits) != 1:
            fails.append(
                AxiomFailure("kink-over-first", (b,), f"{len(hits)} solutions of m = {b}⊳̄m, m⊳̲{b} = {b}")
            )
        hits = [m for m in rng if un(b, m) == m and ov(m, b) == b]
        if len(hits) != 1:
            fails.append(
                AxiomFailure("kink-under-first", (b,), f"{len(hits)} solutions of m = {b}⊳̲m, m⊳̄{b} = {b}")
            )
    full = set(rng)
    for tab, name in ((over, "over"), (under, "under")):
        for y in range(n):
            col = {tab[x][y] for x in range(n)}
            if col != full:
                fails.append(
                    AxiomFailure(f"column-{name}", (y + 1,), "column is not a permutation")
                )
    pairs = {(ov(y, x), un(x, y)) for x in rng for y in rng}
    if len(pairs) != n * n:
        fails.append(AxiomFailure("pair-map", (), "S(x,y) = (y⊳̄x, x⊳̲y) is not a bijection"))
    for x in rng:
        for y in rng:
            for z in rng:
                if un(un(x, y), z) != un(un(x, ov(z, y)), un(y, z)):
                    fails.append(AxiomFailure("exchange-1", (x, y, z), "under/under mismatch"))
                if un(ov(y, x), ov(z, un(x, y))) != ov(un(y, z), un(x, ov(z, y))):
                    fails.append(AxiomFailure("exchange-2", (x, y, z), "mixed mismatch"))
                if ov(ov(z, un(x, y)), ov(y, x)) != ov(ov(z, y), x):
                    fails.append(AxiomFailure("exchange-3", (x, y, z), "over/over mismatch"))
    return AxiomReport(n, tuple(fails))


@dataclass(frozen=True)
class Biquandle:
    """Verified pair of operation tables; immutable and safe to share."""

    order: int
    over: Table
    under: Table
    name: str = ""

    @property
    def is_quandle(self) -> bool:
        return all(v == x + 1 for x, row in enumerate(self.over) for v in row)

    def over_op(self, x: int, y: int) -> int:
        return self.over[x - 1][y - 1]

    def under_op(self, x: int, y: int) -> int:
        return self.under[x - 1][y - 1]


def biquandle(
    over_table: Sequence[Sequence[int]],
    under_table: Sequence[Sequence[int]],
    *,
    name: str = "",
    check: bool = True,
) -> Biquandle:
    over = _freeze(over_table)
    under = _freeze(under_table)
    n = _check_shape(over, under)
    if check:
        report = verify_axioms(over, under)
        if not report.valid:
            raise AxiomViolation(str(report))
    return Biquandle(n, over, under, name)


def quandle(under_table: Sequence[Sequence[int]], *, name: str = "", check: bool = True) -> Biquandle:
    """Lift a quandle table to a biquandle whose over-operation is trivial."""
    under = _freeze(under_table)
    n = len(under)
    over = tuple(tuple(x + 1 for _ in range(n)) for x in range(n))
    return biquandle(over, under, name=name, check=check)


def dihedral_quandle(n: int, *, name: str = "") -> Biquandle:
    """x ⊳ y = 2y - x mod n, the coloring quandle behind Fox n-colorings."""
    under = tuple(
        tuple(((2 * y - x - 1) % n) + 1 for y in range(1, n + 1)) for x in range(1, n + 1)
    )
    return quandle(under, name=name or f"dihedral{n}")


def lookup_over(biq: Biquandle, x: int, y: int) -> int:
    """x ⊳̄ y.  Both arguments 1-based."""
    if not (1 <= x <= biq.order and 1 <= y <= biq.order):
        raise OutOfRangeEntry(f"({x},{y}) out of 1..{biq.order}")
    return biq.over[x - 1][y - 1]


def lookup_under(biq: Biquandle, x: int, y: int) -> int:
    """x ⊳̲ y.  Both arguments 1-based."""
    if not (1 <= x <= biq.order and 1 <= y <= biq.order):
        raise OutOfRangeEntry(f"({x},{y}) out of 1..{biq.order}")
    return biq.under[x - 1][y - 1]


# ---------------------------------------------------------------------------
# coloring count


@lru_cache(maxsize=32)
def _pair_map(biq: Biquandle) -> tuple:
    """0-based G with G[u][o] = (u ⊳̄ o, o ⊳̲ u); bijective by the pair axiom."""
    n = biq.order
    return tuple(
        tuple((biq.over[u][o] - 1, biq.under[o][u] - 1) for o in range(n))
        for u in range(n)
    )


def count_colorings(
    code: SignedGaussCode, biq: Biquandle, *, with_colorings: bool = False
) -> int | tuple[int, list[tuple[int, ...]]]:
    """Number of legitimate arc colorings of ``code`` by ``biq``.

    With ``with_colorings=True`` also returns every coloring as a tuple
    indexed by arc (arc i between entries i and i+1; the empty code has a
    single closed arc).  Exhaustive but propagation-driven: a depth-first
    search branches on the crossing admitting the fewest locally
    consistent completions, so the work tracks the number of partial
    solutions rather than n^(2c).
    """
    if not isinstance(code, SignedGaussCode):
        raise CodeError("coloring needs a signed Gauss code")
    n = biq.order
    e = code.entries
    m = len(e)
    if m == 0:
        cols = [(v,) for v in range(1, n + 1)]
        return (n, cols) if with_colorings else n

    G = _pair_map(biq)
    pos = {v: i for i, v in enumerate(e)}
    # slots per crossing: G(src_u, src_o) == (dst_u, dst_o), all arc indices
    slots = []
    for c in range(1, code.crossings + 1):
        p, q = pos[c], pos[-c]
        u_in, o_in, u_out, o_out = (q - 1) % m, (p - 1) % m, q, p
        if code.signs[c - 1] == 1:
            slots.append((u_in, o_in, u_out, o_out))
        else:
            slots.append((u_out, o_out, u_in, o_in))

    vals: list[int | None] = [None] * m
    done = [False] * len(slots)
    rng_n = range(n)
    ginv: dict[tuple[int, int], tuple[int, int]] = {}
    for a in rng_n:
        for b in rng_n:
            ginv[G[a][b]] = (a, b)
    collected: list[tuple[int, ...]] = []

    def solutions(t: tuple[int, int, int, int]) -> list[tuple[int, int, int, int]]:
        su, so, du, do = t
        vsu, vso = vals[su], vals[so]
        if vsu is None and vso is None:
            vdu, vdo = vals[du], vals[do]
            if vdu is not None and vdo is not None:
                hit = ginv.get((vdu, vdo))
                if hit is None:
                    return []
                a, b = hit
                if su == so and a != b:
                    return []
                return [(a, b, vdu, vdo)]
        out = []
        for a in (rng_n if vsu is None else (vsu,)):
            if so == su:
                bs = (a,)
            elif vso is None:
                bs = rng_n
            else:
                bs = (vso,)
            row = G[a]
            for b in bs:
                x, y = row[b]
                ok = True
                seen: dict[int, int] = {su: a, so: b} if so != su else {su: a}
                for arc, v in ((du, x), (do, y)):
                    w = seen.get(arc)
                    if w is None:
                        w = vals[arc]
                    if w is not None and w != v:
                        ok = False
                        break
                    seen[arc] = v
                if ok:
                    out.append((a, b, x, y))
        return out

    def pick() -> int:
        """Most-constrained undone crossing: full pairs first, then knowns."""
        best_i = -1
        best_score = -1
        for i, (su, so, du, do) in enumerate(slots):
            if done[i]:
                continue
            ks = (vals[su] is not None) + (vals[so] is not None)
            kd = (vals[du] is not None) + (vals[do] is not None)
            score = 100 + ks + kd if (ks == 2 or kd == 2) else ks + kd
            if score > best_score:
                best_i, best_score = i, score
                if score >= 104:
                    break
        return best_i

    def search() -> int:
        best_i = pick()
        if best_i < 0:
            if with_colorings:
                collected.append(tuple(v + 1 for v in vals))  # type: ignore[operator]
            return 1
        t = slots[best_i]
        sols = solutions(t)
        if not sols:
            return 0
        done[best_i] = True
        total = 0
        for sol in sols:
            touched = []
            for arc, v in zip(t, sol):
                if vals[arc] is None:
                    vals[arc] = v
                    touched.append(arc)
            total += search()
            for arc in touched:
                vals[arc] = None
        done[best_i] = False
        return total

    count = search()
    if with_colorings:
        collected.sort()
        return count, collected
    return count


def coloring_lower_bound(count: int, order: int, kind: str = "biquandle") -> int:
    """Smallest b with order**b >= count: a lower bound for the first
    bridge number when ``kind`` is ``"quandle"`` and for the second when
    ``"biquandle"``."""
    if order < 2:
        raise DegenerateOrder(f"order {order} gives no information")
    if count < 1:
        raise ValueError("coloring counts are at least 1 for usable algebras")
    if kind not in ("quandle", "biquandle"):
        raise ValueError(f"kind must be quandle or biquandle, got {kind!r}")
    b = 0
    p = 1
    while p < count:
        p *= order
        b += 1
    return b


# ---------------------------------------------------------------------------
# stock algebras and the bow-tie family

DIHEDRAL_3 = dihedral_quandle(3)

BIQUANDLE_4 = biquandle(
    ((1, 3, 4, 2), (3, 1, 2, 4), (2, 4, 3, 1), (4, 2, 1, 3)),
    ((1, 4, 2, 3), (2, 3, 1, 4), (4, 1, 3, 2), (3, 2, 4, 1)),
    name="biquandle4",
)

TREFOIL = SignedGaussCode((-1, 2, -3, 1, -2, 3), (-1, -1, -1))

# Bow-tie virtual knot: two clasps of positive crossings joined through
# two virtual crossings (which leave no trace in the code).  Its 16
# colorings by BIQUANDLE_4, read arc-by-arc (arc i between entries i and
# i+1), certify a second bridge number of at least 2.
KISHINO = SignedGaussCode((1, 2, -1, -2, -3, -4, 3, 4), (1, 1, 1, 1))


def kishino_family(m: int, n: int) -> SignedGaussCode:
    """The sum of n bow-tie knots and m-1 trefoils.

    Its first bridge number is m while the biquandle coloring count grows
    like 16·4^(n-1), pushing the second bridge number arbitrarily high.
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    acc: SignedGaussCode = SignedGaussCode((), ())
    for _ in range(n):
        acc = connected_sum(acc, KISHINO)
    for _ in range(m - 1):
        acc = connected_sum(acc, TREFOIL)
    return acc


# ---------------------------------------------------------------------------
# table files


def load_table_file(path: str | Path) -> Biquandle:
    """Read an operation-table file.

    Biquandle files start with a line ``n`` followed by n rows of the over
    table and n rows of the under table.  Quandle files start with
    ``quandle n`` followed by the n rows of the under table.
    """
    path = Path(path)
    tokens_by_line = [
        line.split() for line in path.read_text().splitlines() if line.strip()
    ]
    if not tokens_by_line:
        raise ShapeMismatch(f"{path}: empty table file")
    head = tokens_by_line[0]
    rows = tokens_by_line[1:]
    is_quandle = head[0].lower() == "quandle"
    try:
        n = int(head[1] if is_quandle else head[0])
    except (IndexError, ValueError):
        raise ShapeMismatch(f"{path}: bad header {' '.join(head)!r}") from None
    want = n if is_quandle else 2 * n
    if len(rows) != want:
        raise ShapeMismatch(f"{path}: expected {want} table rows, got {len(rows)}")
    try:
        table = [[int(v) for v in row] for row in rows]
    except ValueError:
        raise ShapeMismatch(f"{path}: non-integer table entry") from None
    if is_quandle:
        return quandle(table, name=path.stem)
    return biquandle(table[:n], table[n:], name=path.stem)
