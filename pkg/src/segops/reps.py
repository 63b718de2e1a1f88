"""Representation parameters: the two tractable families plus zero.

The calculus in this package stays inside two classes that are closed under
the one-segment derivative operators:

* ``GenericSt(m)``: the generic representation attached to a multisegment
  ``m`` whose segments are pairwise unlinked. ``GenericSt(EMPTY)`` is the
  parameter of the trivial representation of the trivial group.
* ``ZSegment(d)``: the one-segment degenerate parameter ``<d>`` (the trivial
  representation when ``d`` is centered; more generally a character twist).

``ZeroRep`` is the absorbing zero. Products mixing the two families are not
representable here and never arise from the supported operators.

``GenericSt`` payloads may opt in to adjacent-linked pairs (segments that
touch end to end without overlapping): the worked families of relevant pairs
use such parameters as formal inputs. Overlapping-linked payloads are always
rejected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .errors import NotPairwiseUnlinked, ZeroRepInput
from .segments import (
    Multisegment,
    Segment,
    SegmentRelation,
    intersection_of,
    relation,
)

__all__ = [
    'GenericSt',
    'ZSegment',
    'ZeroRep',
    'ZERO',
    'RepParam',
    'make_generic',
    'make_zsegment',
    'dual_rep',
    'shift_rep',
    'csupp',
    'l_abs_rep',
    'isomorphic',
    'canonical_key',
]


@dataclass(frozen=True)
class GenericSt:
    """Generic parameter St(m); construct through make_generic."""

    segments: Multisegment

    def __str__(self) -> str:
        return f'St{self.segments}'


@dataclass(frozen=True)
class ZSegment:
    """One-segment degenerate parameter <d>."""

    segment: Segment

    def __str__(self) -> str:
        return f'Z<{self.segment}>'


@dataclass(frozen=True)
class ZeroRep:
    """The zero parameter (absorbing under all operators)."""

    def __str__(self) -> str:
        return 'Zero'


ZERO = ZeroRep()

RepParam = Union[GenericSt, ZSegment, ZeroRep]


def make_generic(m: Multisegment, *, allow_adjacent: bool = False) -> GenericSt:
    """Validated GenericSt constructor.

    By default every linked pair in the payload is rejected. With
    allow_adjacent=True, linked pairs whose point sets are disjoint (end to
    end contact) are admitted; overlapping linked pairs never are.

    >>> from .segments import CuspidalLine
    >>> r = CuspidalLine('r', 'r', 1)
    >>> make_generic(Multisegment.of([Segment(r, 0, 2), Segment(r, 2, 4)]))
    Traceback (most recent call last):
        ...
    segops.errors.NotPairwiseUnlinked: [0,1]@r and [1,2]@r are linked
    """
    for x, y in itertools.combinations(m.items, 2):
        if relation(x, y) is SegmentRelation.LINKED:
            if allow_adjacent and intersection_of(x, y) is None:
                continue
            raise NotPairwiseUnlinked(f'{x} and {y} are linked')
    return GenericSt(m)


def make_zsegment(d: Segment) -> ZSegment:
    return ZSegment(d)


def dual_rep(pi: RepParam) -> RepParam:
    """Dual parameter: both families are sent to themselves segmentwise."""
    if isinstance(pi, ZeroRep):
        return pi
    if isinstance(pi, GenericSt):
        return GenericSt(pi.segments.dual())
    return ZSegment(pi.segment.dual())


def shift_rep(pi: RepParam, c: int) -> RepParam:
    """Twist by c half-units (translate every segment)."""
    if isinstance(pi, ZeroRep):
        return pi
    if isinstance(pi, GenericSt):
        return GenericSt(pi.segments.shifted(c))
    return ZSegment(pi.segment.shifted(c))


def csupp(pi: RepParam) -> tuple[tuple[str, int], ...]:
    """Cuspidal support: sorted multiset of (line name, exponent) pairs."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('zero parameter has no cuspidal support')
    if isinstance(pi, GenericSt):
        return pi.segments.points()
    return tuple(sorted((pi.segment.line.name, p) for p in pi.segment.points()))


def l_abs_rep(pi: RepParam) -> int:
    """Total size of the parameter (the rank of its group)."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('zero parameter has no size')
    if isinstance(pi, GenericSt):
        return pi.segments.l_abs()
    return pi.segment.l_abs()


def canonical_key(pi: RepParam) -> tuple:
    """Hashable key identifying parameters up to isomorphism.

    A one-point ZSegment and the one-point GenericSt name the same
    irreducible (a character), so they share a key.
    """
    if isinstance(pi, ZeroRep):
        return ('zero',)
    if isinstance(pi, ZSegment):
        d = pi.segment
        if d.a == d.b:
            pi = GenericSt(Multisegment.of([d]))
        else:
            return ('z', d.line.name, d.a, d.b)
    return ('st',) + tuple(d.sort_key() for d in pi.segments.items)


def isomorphic(x: RepParam, y: RepParam) -> bool:
    """Equality up to the one-point ZSegment/GenericSt identification."""
    return canonical_key(x) == canonical_key(y)
