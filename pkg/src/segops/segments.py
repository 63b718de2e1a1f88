"""Segments and multisegments over cuspidal lines, in half-step units.

A cuspidal line is a family of points indexed by half-integer exponents. To
keep every quantity an exact integer, exponents are stored doubled: the
internal coordinate ``k`` stands for the exponent ``k/2``, so one whole twist
step is ``2`` and the printed form ``[1/2,5/2]@r`` is stored as ``a=1, b=5``.

A segment ``[a,b]`` collects the points ``a, a+2, ..., b``; it requires
``b - a`` even and nonnegative. A multisegment is a finite multiset of
segments, kept as a canonically sorted tuple.

>>> r = CuspidalLine('r', 'r', 1)
>>> d = Segment(r, 0, 4)
>>> d.points()
(0, 2, 4)
>>> d.l_abs()
3
>>> d.dual()
Segment(line=CuspidalLine(name='r', dual_name='r', weight=1), a=-4, b=0)
>>> relation(Segment(r, 0, 2), Segment(r, 4, 6))
<SegmentRelation.LINKED: 'linked'>
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotASegment

__all__ = [
    'CuspidalLine',
    'Segment',
    'SegmentRelation',
    'relation',
    'union_of',
    'intersection_of',
    'dominates',
    'is_saturated_wrt',
    'Multisegment',
    'EMPTY',
    'is_admissible_order',
    'admissible_orders',
    'canonical_admissible_order',
]


@dataclass(frozen=True)
class CuspidalLine:
    """A line of cuspidal points, identified by name.

    weight: the size of the base point; all length accounting is in
        multiples of it. The dual of a line has the same weight, and taking
        the dual twice returns the original line, so the pair
        (name, dual_name) determines both directions.
    """

    name: str
    dual_name: str
    weight: int = 1

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise ValueError(f'line weight must be positive, got {self.weight}')

    def dual(self) -> 'CuspidalLine':
        return CuspidalLine(self.dual_name, self.name, self.weight)

    @property
    def is_self_dual(self) -> bool:
        return self.name == self.dual_name


@dataclass(frozen=True)
class Segment:
    """The segment ``[a,b]`` on a line, endpoints in half-step units.

    Constraints: b - a must be nonnegative and even (the points step by a
    whole twist, i.e. by 2 half-units).

    >>> r = CuspidalLine('r', 'r', 1)
    >>> Segment(r, 3, 1)
    Traceback (most recent call last):
        ...
    segops.errors.NotASegment: endpoints out of order: a=3 > b=1
    >>> Segment(r, 0, 3)
    Traceback (most recent call last):
        ...
    segops.errors.NotASegment: endpoint step must be even: a=0, b=3
    """

    line: CuspidalLine
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.b < self.a:
            raise NotASegment(f'endpoints out of order: a={self.a} > b={self.b}')
        if (self.b - self.a) % 2 != 0:
            raise NotASegment(f'endpoint step must be even: a={self.a}, b={self.b}')

    def points(self) -> tuple[int, ...]:
        return tuple(range(self.a, self.b + 1, 2))

    def num_points(self) -> int:
        return (self.b - self.a) // 2 + 1

    def l_abs(self) -> int:
        """Total size: number of points times the line weight."""
        return self.num_points() * self.line.weight

    def dual(self) -> 'Segment':
        """Mirror through zero onto the dual line: [a,b] -> [-b,-a]."""
        return Segment(self.line.dual(), -self.b, -self.a)

    def shifted(self, c: int) -> 'Segment':
        """Translate both endpoints by c half-units."""
        return Segment(self.line, self.a + c, self.b + c)

    def sort_key(self) -> tuple:
        return (self.line.name, self.a, self.b)

    def __str__(self) -> str:
        return f'[{_half(self.a)},{_half(self.b)}]@{self.line.name}'


def _half(k: int) -> str:
    # exponent k/2 rendered without floats
    if k % 2 == 0:
        return str(k // 2)
    return f'{k}/2'


class SegmentRelation(Enum):
    """Mutually exclusive positions of two segments (one always holds)."""

    LINKED = 'linked'
    NESTED = 'nested'
    EQUAL = 'equal'
    DISJOINT_UNLINKED = 'disjoint-unlinked'
    DIFFERENT_LINE = 'different-line'


def _same_grid(x: Segment, y: Segment) -> bool:
    # same line and endpoint parity: point sets can interact at all
    return x.line == y.line and (x.a - y.a) % 2 == 0


def _contains(x: Segment, y: Segment) -> bool:
    # point-set containment y subset-of x; requires a shared grid
    return _same_grid(x, y) and x.a <= y.a and y.b <= x.b


def relation(x: Segment, y: Segment) -> SegmentRelation:
    """Classify the position of two segments.

    Linked means: same line and parity, neither contains the other, and the
    union of their point sets is again a segment. Adjacent segments
    (``y.a == x.b + 2``) qualify; equal segments do not.

    >>> r = CuspidalLine('r', 'r', 1)
    >>> relation(Segment(r, 0, 2), Segment(r, 2, 4)).value
    'linked'
    >>> relation(Segment(r, 2, 2), Segment(r, 0, 4)).value
    'nested'
    >>> relation(Segment(r, 0, 2), Segment(r, 8, 10)).value
    'disjoint-unlinked'
    """
    if x.line != y.line:
        return SegmentRelation.DIFFERENT_LINE
    if x.a == y.a and x.b == y.b:
        return SegmentRelation.EQUAL
    if not _same_grid(x, y):
        return SegmentRelation.DISJOINT_UNLINKED
    if _contains(x, y) or _contains(y, x):
        return SegmentRelation.NESTED
    if max(x.a, y.a) <= min(x.b, y.b) + 2:
        return SegmentRelation.LINKED
    return SegmentRelation.DISJOINT_UNLINKED


def union_of(x: Segment, y: Segment) -> Segment:
    """Union of point sets, when that is again a segment.

    Defined exactly for linked, nested, or equal pairs.

    >>> r = CuspidalLine('r', 'r', 1)
    >>> str(union_of(Segment(r, 0, 2), Segment(r, 2, 4)))
    '[0,2]@r'
    """
    rel = relation(x, y)
    if rel in (SegmentRelation.LINKED, SegmentRelation.NESTED, SegmentRelation.EQUAL):
        return Segment(x.line, min(x.a, y.a), max(x.b, y.b))
    raise NotASegment(f'union of {x} and {y} is not a segment')


def intersection_of(x: Segment, y: Segment) -> Optional[Segment]:
    """Intersection of point sets, or None when empty."""
    if not _same_grid(x, y):
        return None
    a, b = max(x.a, y.a), min(x.b, y.b)
    if a > b:
        return None
    return Segment(x.line, a, b)


def dominates(x: Segment, y: Segment) -> bool:
    """Strict linking order: x and y linked with x starting strictly later.

    Irreflexive and asymmetric; taking duals reverses it.
    """
    return relation(x, y) is SegmentRelation.LINKED and x.a > y.a


def is_saturated_wrt(cand: Segment, base: Segment) -> bool:
    """cand extends base to the left while ending at the same point."""
    return cand.line == base.line and cand.b == base.b and cand.a <= base.a


@dataclass(frozen=True)
class Multisegment:
    """A finite multiset of segments, stored canonically sorted.

    >>> r = CuspidalLine('r', 'r', 1)
    >>> m = Multisegment.of([Segment(r, 4, 6), Segment(r, 0, 2)])
    >>> [str(d) for d in m]
    ['[0,1]@r', '[2,3]@r']
    >>> m.l_abs()
    4
    """

    items: tuple[Segment, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.items, key=Segment.sort_key))
        object.__setattr__(self, 'items', ordered)

    @classmethod
    def of(cls, segments: Iterable[Segment]) -> 'Multisegment':
        return cls(tuple(segments))

    def __iter__(self) -> Iterator[Segment]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __bool__(self) -> bool:
        return bool(self.items)

    def l_abs(self) -> int:
        return sum(d.l_abs() for d in self.items)

    def points(self) -> tuple[tuple[str, int], ...]:
        """Sorted multiset of (line name, exponent) pairs covered."""
        out = [(d.line.name, p) for d in self.items for p in d.points()]
        return tuple(sorted(out))

    def dual(self) -> 'Multisegment':
        return Multisegment.of(d.dual() for d in self.items)

    def shifted(self, c: int) -> 'Multisegment':
        return Multisegment.of(d.shifted(c) for d in self.items)

    def add(self, d: Segment) -> 'Multisegment':
        return Multisegment(self.items + (d,))

    def remove_one(self, d: Segment) -> 'Multisegment':
        """Remove a single copy of d; d must be present."""
        rest = list(self.items)
        rest.remove(d)
        return Multisegment(tuple(rest))

    def pairwise_unlinked(self) -> bool:
        return all(
            relation(x, y) is not SegmentRelation.LINKED
            for x, y in itertools.combinations(self.items, 2)
        )

    def __str__(self) -> str:
        return '{' + ','.join(str(d) for d in self.items) + '}'


EMPTY = Multisegment(())


def is_admissible_order(seq: Sequence[Segment]) -> bool:
    """No earlier segment dominates a later one.

    This is the ordering constraint under which iterated right derivatives
    and left integrals compose to a well-defined multisegment operator; the
    mirrored operators use the reversed orderings.
    """
    return not any(
        dominates(seq[i], seq[j])
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
    )


def admissible_orders(m: Multisegment) -> list[tuple[Segment, ...]]:
    """All admissible orderings of m, without duplicates.

    >>> r = CuspidalLine('r', 'r', 1)
    >>> m = Multisegment.of([Segment(r, 0, 2), Segment(r, 2, 4)])
    >>> [[str(d) for d in o] for o in admissible_orders(m)]
    [['[0,1]@r', '[1,2]@r']]
    """
    seen: set[tuple[tuple, ...]] = set()
    out: list[tuple[Segment, ...]] = []
    for perm in itertools.permutations(m.items):
        key = tuple(d.sort_key() for d in perm)
        if key in seen:
            continue
        seen.add(key)
        if is_admissible_order(perm):
            out.append(perm)
    return out


def canonical_admissible_order(m: Multisegment) -> tuple[Segment, ...]:
    """The admissible ordering picked greedily by canonical sort key.

    At each step the candidates are the remaining segments that dominate no
    other remaining segment; the domination relation is acyclic, so a
    candidate always exists.
    """
    remaining = list(m.items)
    out: list[Segment] = []
    while remaining:
        pick = None
        for d in sorted(remaining, key=Segment.sort_key):
            if not any(dominates(d, other) for other in remaining if other is not d):
                pick = d
                break
        assert pick is not None, 'domination relation must be acyclic'
        remaining.remove(pick)
        out.append(pick)
    return tuple(out)
