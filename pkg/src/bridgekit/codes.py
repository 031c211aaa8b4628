"""Gauss codes and the combinatorial rewrites defined on them.

A Gauss code records the crossing visits made while traversing a knot
diagram once: crossing ``i`` contributes the entry ``+i`` where the
traversal passes over and ``-i`` where it passes under.  The sequence is
cyclic.  Every double-occurrence sequence is accepted, so the same type
covers virtual knots (codes with no planar realization) as well as
classical ones.

Crossing signs, when present, distinguish the two possible local
orientations of a crossing; ``+1`` is the unbarred type and ``-1`` the
barred one.  The standard diagram of the trefoil, for example, carries
the code ``-1 2 -3 1 -2 3`` with all three signs ``-1``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    CodeError,
    DuplicateOccurrence,
    LabelAbsent,
    MalformedSignBlock,
    MissingPartner,
    NonContiguousLabels,
    PatternNotPresent,
    ZeroLabel,
)

__all__ = [
    "GaussCode",
    "SignedGaussCode",
    "Strand",
    "parse",
    "serialize",
    "strands",
    "overbridge_count",
    "apply_move1",
    "apply_move2",
    "apply_move3",
    "simplify",
    "canonical_form",
    "connected_sum",
    "virtualize_remove",
    "crossing_switch",
    "parity_filter",
    "random_code",
]


def _validate_entries(entries: tuple[int, ...]) -> None:
    if len(entries) % 2:
        raise MissingPartner("a Gauss code has an even number of entries")
    if any(v == 0 for v in entries):
        raise ZeroLabel("0 is not a crossing label")
    counts = Counter(entries)
    for v, c in counts.items():
        if c > 1:
            raise DuplicateOccurrence(f"entry {v} occurs {c} times")
    for v in counts:
        if -v not in counts:
            raise MissingPartner(f"entry {v} has no partner {-v}")
    n = len(entries) // 2
    labels = {abs(v) for v in entries}
    if labels != set(range(1, n + 1)):
        raise NonContiguousLabels(
            f"labels must be exactly 1..{n}, got {sorted(labels)}; parse() relabels"
        )


@dataclass(frozen=True)
class GaussCode:
    """A cyclic double-occurrence sequence over ±1..±n, one ± pair per crossing."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        _validate_entries(self.entries)

    @property
    def crossings(self) -> int:
        return len(self.entries) // 2

    def __len__(self) -> int:
        return len(self.entries)

    def position(self, entry: int) -> int:
        """Index of the (unique) occurrence of ``entry``."""
        try:
            return self.entries.index(entry)
        except ValueError:
            raise LabelAbsent(f"no entry {entry}") from None


@dataclass(frozen=True)
class SignedGaussCode(GaussCode):
    """A Gauss code whose crossings additionally carry a ±1 orientation sign.

    ``signs[i]`` is the sign of crossing ``i + 1``.
    """

    signs: tuple[int, ...] = ()

    def __post_init__(self):
        super().__post_init__()
        object.__setattr__(self, "signs", tuple(self.signs))
        if len(self.signs) != self.crossings:
            raise MalformedSignBlock(
                f"{self.crossings} crossings but {len(self.signs)} signs"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise MalformedSignBlock("signs must be +1 or -1")

    @property
    def crossing_signs(self) -> dict[int, int]:
        return {i + 1: s for i, s in enumerate(self.signs)}

    def sign_of(self, label: int) -> int:
        if not 1 <= label <= self.crossings:
            raise LabelAbsent(f"no crossing {label}")
        return self.signs[label - 1]


@dataclass(frozen=True)
class Strand:
    """A maximal cyclic run from one negative entry to the next.

    ``labels`` covers the run including both delimiting negative entries;
    the half-open index range ``[start_index, end_index)`` owns the
    starting negative entry and the interior positives, so the ranges of
    all strands partition the entry positions.  A code with no crossings
    yields the single ``closed`` strand.
    """

    start_index: int
    end_index: int
    labels: tuple[int, ...]
    closed: bool = False

    @property
    def is_overbridge(self) -> bool:
        return any(v > 0 for v in self.labels)


# ---------------------------------------------------------------------------
# text format


def parse(text: str) -> GaussCode | SignedGaussCode:
    """Parse ``"-1 2 -3 1 -2 3"`` or ``"-1 2 -3 1 -2 3 | - - -"``.

    Entries may be space- or comma-separated.  Non-contiguous crossing
    labels are renamed to 1..n in order of first appearance.  The optional
    sign block carries one ``+``/``-`` per crossing, indexed by the final
    crossing labels.
    """
    head, bar, tail = text.partition("|")
    raw: list[int] = []
    for tok in head.replace(",", " ").split():
        try:
            raw.append(int(tok))
        except ValueError:
            raise CodeError(f"not an integer entry: {tok!r}") from None
    if any(v == 0 for v in raw):
        raise ZeroLabel("0 is not a crossing label")
    counts = Counter(raw)
    for v, c in counts.items():
        if c > 1:
            raise DuplicateOccurrence(f"entry {v} occurs {c} times")
    for v in counts:
        if -v not in counts:
            raise MissingPartner(f"entry {v} has no partner {-v}")
    labels = sorted({abs(v) for v in raw})
    if labels != list(range(1, len(raw) // 2 + 1)):
        raw = list(_relabel(raw))
    if not bar:
        return GaussCode(tuple(raw))
    signs = []
    for tok in tail.split():
        if tok in ("+", "+1"):
            signs.append(1)
        elif tok in ("-", "-1"):
            signs.append(-1)
        else:
            raise MalformedSignBlock(f"bad sign token {tok!r}")
    if len(signs) != len(raw) // 2:
        raise MalformedSignBlock(
            f"{len(raw) // 2} crossings but {len(signs)} signs"
        )
    return SignedGaussCode(tuple(raw), tuple(signs))


def serialize(code: GaussCode) -> str:
    """Inverse of :func:`parse`."""
    body = " ".join(str(v) for v in code.entries)
    if isinstance(code, SignedGaussCode):
        block = " ".join("+" if s > 0 else "-" for s in code.signs)
        return f"{body} | {block}"
    return body


# ---------------------------------------------------------------------------
# relabeling and reconstruction helpers


def _relabel(entries: Sequence[int]) -> tuple[int, ...]:
    mapping: dict[int, int] = {}
    out = []
    for v in entries:
        a = abs(v)
        if a not in mapping:
            mapping[a] = len(mapping) + 1
        out.append(mapping[a] if v > 0 else -mapping[a])
    return tuple(out)


def _relabel_map(entries: Sequence[int]) -> dict[int, int]:
    mapping: dict[int, int] = {}
    for v in entries:
        a = abs(v)
        if a not in mapping:
            mapping[a] = len(mapping) + 1
    return mapping


def _rebuild(
    code: GaussCode, entries: Sequence[int], signs_by_old_label: dict[int, int] | None = None
) -> GaussCode:
    """Relabel ``entries`` by first appearance and wrap in the type of ``code``.

    ``signs_by_old_label`` overrides the sign carried over for a label; by
    default signs follow the labels of ``code``.
    """
    mapping = _relabel_map(entries)
    new_entries = tuple(
        mapping[v] if v > 0 else -mapping[-v] for v in entries
    )
    if not isinstance(code, SignedGaussCode):
        return GaussCode(new_entries)
    signs = [0] * len(mapping)
    for old, new in mapping.items():
        if signs_by_old_label and old in signs_by_old_label:
            signs[new - 1] = signs_by_old_label[old]
        else:
            signs[new - 1] = code.signs[old - 1]
    return SignedGaussCode(new_entries, tuple(signs))


def _same_kind(a: GaussCode, b: GaussCode) -> bool:
    return isinstance(a, SignedGaussCode) == isinstance(b, SignedGaussCode)


# ---------------------------------------------------------------------------
# strands and overbridges


def strands(code: GaussCode) -> list[Strand]:
    """Split the cyclic sequence at its negative entries.

    A code with n >= 1 crossings has exactly n strands, listed in order of
    their starting position.  The strand beginning at ``-c`` is crossing
    c's outgoing strand; the one ending at ``-c`` is its incoming strand.
    """
    e = code.entries
    if not e:
        return [Strand(0, 0, (), closed=True)]
    m = len(e)
    negs = [i for i, v in enumerate(e) if v < 0]
    out = []
    for idx, s in enumerate(negs):
        t = negs[(idx + 1) % len(negs)]
        labels = [e[s]]
        j = (s + 1) % m
        while j != t:
            labels.append(e[j])
            j = (j + 1) % m
        labels.append(e[t])
        out.append(Strand(s, t, tuple(labels)))
    return out


def overbridge_count(code: GaussCode) -> int:
    """Number of strands that pass over at least one crossing."""
    if not code.entries:
        return 0
    return sum(1 for s in strands(code) if s.is_overbridge)


# ---------------------------------------------------------------------------
# the three rewrite moves


def apply_move1(
    code: GaussCode,
    position: int = 0,
    direction: str = "delete",
    *,
    over_first: bool = True,
    sign: int = 1,
) -> GaussCode:
    """Insert or delete a kink ``a,-a`` (or ``-a,a``) at ``position``.

    For ``insert`` the kink uses a fresh crossing; ``over_first`` picks
    ``a,-a`` versus ``-a,a`` and ``sign`` the new crossing's sign (signed
    codes only).  For ``delete`` the two entries at ``position``,
    ``position + 1`` (cyclically) must form a kink of either order.
    """
    e = list(code.entries)
    m = len(e)
    if direction == "insert":
        a = code.crossings + 1
        pair = [a, -a] if over_first else [-a, a]
        position = position % (m + 1) if m else 0
        new = e[:position] + pair + e[position:]
        return _rebuild(code, new, {a: sign})
    if direction != "delete":
        raise ValueError(f"direction must be insert or delete, got {direction!r}")
    if m < 2:
        raise PatternNotPresent("nothing to delete")
    i = position % m
    j = (i + 1) % m
    if e[i] != -e[j]:
        raise PatternNotPresent(f"entries at {i},{j} are not a kink pair")
    remaining = [v for k, v in enumerate(e) if k not in (i, j)]
    return _rebuild(code, remaining)


def _move2_partner(e: list[int], i: int) -> tuple[int, int] | None:
    """If a strand-pair pattern starts at ``i``, return its partner pair start.

    The pattern is two cyclically adjacent entries of equal polarity whose
    negations are also adjacent, in either order; returns ``(j, flipped)``
    where ``flipped`` is 1 when the partner pair is reversed.
    """
    m = len(e)
    x, y = e[i], e[(i + 1) % m]
    if abs(x) == abs(y) or (x > 0) != (y > 0):
        return None
    jx = e.index(-x)
    jy = e.index(-y)
    if (jx + 1) % m == jy:
        j = jx
        flipped = 0
    elif (jy + 1) % m == jx:
        j = jy
        flipped = 1
    else:
        return None
    # the two pairs must not overlap
    if {i, (i + 1) % m} & {j, (j + 1) % m}:
        return None
    return j, flipped


def apply_move2(
    code: GaussCode,
    position: int = 0,
    direction: str = "delete",
    *,
    position2: int | None = None,
    over_first: bool = True,
    parallel: bool = True,
    sign: int = 1,
) -> GaussCode:
    """Insert or delete a pair of crossings where one strand slides over another.

    Deletion requires the pair starting at ``position`` to consist of two
    adjacent entries of equal polarity whose negations are adjacent
    elsewhere (in either order); on signed codes the two crossings must
    carry opposite signs, as every such slide creates.

    Insertion cuts the code at ``position`` and ``position2`` (both
    indices into the uncut code, ``position <= position2``) and adds a
    fresh pair of crossings: the overpassing pair at the first cut when
    ``over_first``, with the partner pair in matching or reversed order
    per ``parallel``.  ``sign`` is the sign of the first new crossing; the
    second automatically gets the opposite.
    """
    e = list(code.entries)
    m = len(e)
    if direction == "insert":
        a = code.crossings + 1
        b = a + 1
        p1 = position % (m + 1) if m else 0
        p2 = p1 if position2 is None else position2 % (m + 1) if m else 0
        if p2 < p1:
            p1, p2 = p2, p1
        over_pair = [a, b]
        under_pair = [-a, -b] if parallel else [-b, -a]
        first, second = (
            (over_pair, under_pair) if over_first else (under_pair, over_pair)
        )
        new = e[:p1] + first + e[p1:p2] + second + e[p2:]
        return _rebuild(code, new, {a: sign, b: -sign})
    if direction != "delete":
        raise ValueError(f"direction must be insert or delete, got {direction!r}")
    if m < 4:
        raise PatternNotPresent("too short for a slide pattern")
    i = position % m
    hit = _move2_partner(e, i)
    if hit is None:
        raise PatternNotPresent(f"no slide pattern at {i}")
    j, _ = hit
    if isinstance(code, SignedGaussCode):
        la, lb = abs(e[i]), abs(e[(i + 1) % m])
        if code.signs[la - 1] == code.signs[lb - 1]:
            raise PatternNotPresent("slide pair must have opposite signs")
    drop = {i, (i + 1) % m, j, (j + 1) % m}
    remaining = [v for k, v in enumerate(e) if k not in drop]
    return _rebuild(code, remaining)


def apply_move3(code: GaussCode, position: int, *, reverse: bool = False) -> GaussCode:
    """Slide a strand across a crossing: the triple-crossing rewrite.

    Forward direction matches the cyclic pattern ``a,b,..,-a,c,..,-b,-c,..``
    starting at ``position`` (``a``, ``b``, ``c`` positive entries) and
    rewrites it to ``b,a,..,c,-a,..,-c,-b,..``; ``reverse`` undoes it.
    Crossing signs are untouched; on signed codes the three crossings must
    carry equal signs, which is when this entry pattern is a real slide
    (mixed-sign slides rearrange the entries differently).
    """
    e = list(code.entries)
    m = len(e)
    if m < 6:
        raise PatternNotPresent("too short for a triple-crossing pattern")
    i = position % m

    def ahead(frm: int, to: int) -> int:
        return (to - frm) % m

    if not reverse:
        a, b = e[i], e[(i + 1) % m]
        if a <= 0 or b <= 0:
            raise PatternNotPresent("pattern needs two positive entries first")
        p2 = e.index(-a)
        c = e[(p2 + 1) % m]
        if c <= 0 or abs(c) in (a, b):
            raise PatternNotPresent("no positive third crossing after -a")
        p3 = e.index(-b)
        if e[(p3 + 1) % m] != -c:
            raise PatternNotPresent("-b is not followed by -c")
    else:
        b, a = e[i], e[(i + 1) % m]
        if a <= 0 or b <= 0:
            raise PatternNotPresent("pattern needs two positive entries first")
        p2 = e.index(-a)
        c = e[(p2 - 1) % m]
        if c <= 0 or abs(c) in (a, b):
            raise PatternNotPresent("no positive third crossing before -a")
        p2 = (p2 - 1) % m
        p3 = e.index(-c)
        if e[(p3 + 1) % m] != -b:
            raise PatternNotPresent("-c is not followed by -b")
    # all three two-entry slots, in cyclic order from i, must be disjoint
    slots = [i, (i + 1) % m, p2, (p2 + 1) % m, p3, (p3 + 1) % m]
    if len(set(slots)) != 6:
        raise PatternNotPresent("pattern slots overlap")
    if not ahead(i, p2) >= 2 or not ahead(i, p3) > ahead(i, p2) + 1:
        raise PatternNotPresent("pattern slots out of cyclic order")
    if isinstance(code, SignedGaussCode):
        if len({code.signs[a - 1], code.signs[b - 1], code.signs[abs(c) - 1]}) != 1:
            raise PatternNotPresent("slide needs three equal-sign crossings")
    for p in (i, p2, p3):
        e[p], e[(p + 1) % m] = e[(p + 1) % m], e[p]
    return _rebuild(code, e)


# ---------------------------------------------------------------------------
# reduction and canonical form


def _find_move1_delete(code: GaussCode) -> int | None:
    e = code.entries
    m = len(e)
    for i in range(m):
        if e[i] == -e[(i + 1) % m]:
            return i
    return None


def _find_move2_delete(code: GaussCode) -> int | None:
    e = list(code.entries)
    m = len(e)
    for i in range(m):
        hit = _move2_partner(e, i)
        if hit is None:
            continue
        if isinstance(code, SignedGaussCode):
            la, lb = abs(e[i]), abs(e[(i + 1) % m])
            if code.signs[la - 1] == code.signs[lb - 1]:
                continue
        return i
    return None


def simplify(code: GaussCode) -> GaussCode:
    """Greedily delete kinks and slide pairs until no pattern remains."""
    cur = code
    while True:
        p = _find_move1_delete(cur)
        if p is not None:
            cur = apply_move1(cur, p, "delete")
            continue
        p = _find_move2_delete(cur)
        if p is not None:
            cur = apply_move2(cur, p, "delete")
            continue
        return cur


def _orbit_key(code: GaussCode, seq: Sequence[int]) -> tuple:
    mapping = _relabel_map(seq)
    entries = tuple(mapping[v] if v > 0 else -mapping[-v] for v in seq)
    if not isinstance(code, SignedGaussCode):
        return (entries,)
    signs = [0] * len(mapping)
    for old, new in mapping.items():
        signs[new - 1] = code.signs[old - 1]
    return (entries, tuple(signs))


def canonical_form(code: GaussCode) -> GaussCode:
    """Lexicographically smallest representative over rotations, reversal
    and first-appearance relabelings.  Used as the dedup key."""
    e = code.entries
    if not e:
        return code
    m = len(e)
    best = None
    for rev in (False, True):
        seq = tuple(reversed(e)) if rev else e
        for r in range(m):
            rot = seq[r:] + seq[:r]
            key = _orbit_key(code, rot)
            if best is None or key < best:
                best = key
    entries = best[0]
    if isinstance(code, SignedGaussCode):
        return SignedGaussCode(entries, best[1])
    return GaussCode(entries)


# ---------------------------------------------------------------------------
# sums and virtualization edits


def connected_sum(a: GaussCode, b: GaussCode, cut: int = 0) -> GaussCode:
    """Splice ``b`` into ``a`` at entry index ``cut`` of ``a``.

    ``b``'s crossings are relabeled above ``a``'s.  The cut point does not
    affect any invariant computed in this package.  Both codes must be
    signed, or both unsigned.
    """
    if not _same_kind(a, b):
        raise CodeError("cannot sum a signed and an unsigned code")
    na = a.crossings
    shifted = tuple(v + na if v > 0 else v - na for v in b.entries)
    cut = cut % (len(a.entries) + 1) if a.entries else 0
    entries = a.entries[:cut] + shifted + a.entries[cut:]
    if isinstance(a, SignedGaussCode):
        return SignedGaussCode(entries, a.signs + b.signs)
    return GaussCode(entries)


def virtualize_remove(code: GaussCode, k: int) -> GaussCode:
    """Delete the pair ±k, turning that crossing virtual; labels compact."""
    if not 1 <= k <= code.crossings:
        raise LabelAbsent(f"no crossing {k}")
    remaining = [v for v in code.entries if abs(v) != k]
    return _rebuild(code, remaining)


def crossing_switch(code: GaussCode, j: int) -> GaussCode:
    """Exchange over and under at crossing ``j`` (entries ±j swap signs).

    On signed codes the crossing's sign flips as well.
    """
    if not 1 <= j <= code.crossings:
        raise LabelAbsent(f"no crossing {j}")
    entries = tuple(-v if abs(v) == j else v for v in code.entries)
    if isinstance(code, SignedGaussCode):
        signs = tuple(
            -s if i == j - 1 else s for i, s in enumerate(code.signs)
        )
        return SignedGaussCode(entries, signs)
    return GaussCode(entries)


def parity_filter(code: GaussCode) -> bool:
    """Necessary condition for a code to come from a planar diagram.

    True iff every label has an even number of entries strictly between
    its two occurrences.  False proves the code is virtual-only; True is
    inconclusive.
    """
    e = code.entries
    pos: dict[int, list[int]] = {}
    for i, v in enumerate(e):
        pos.setdefault(abs(v), []).append(i)
    for p, q in pos.values():
        if (q - p) % 2 == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# test / batch utility


def random_code(
    crossings: int, rng: random.Random | None = None, *, signed: bool = False
) -> GaussCode | SignedGaussCode:
    """Uniformly random double-occurrence sequence with ``crossings`` crossings."""
    rng = rng or random.Random()
    pool = [v for i in range(1, crossings + 1) for v in (i, -i)]
    rng.shuffle(pool)
    entries = _relabel(pool)
    if not signed:
        return GaussCode(entries)
    signs = tuple(rng.choice((1, -1)) for _ in range(crossings))
    return SignedGaussCode(entries, signs)
