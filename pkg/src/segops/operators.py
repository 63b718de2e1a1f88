"""One-segment derivative and integral operators, and their chain forms.

``derive(pi, d, Side.R)`` applies the right derivative attached to the
segment ``d``; ``Side.L`` gives the left one. Derivatives are total (zero is
a legitimate value); integrals are partial and raise ``UnsupportedDomain``
outside their domain. Both families of parameters are closed under the
supported operators; zero input is an error, zero output is not.

Action on GenericSt(m), right side, with d = [c,b]:

* nonzero iff m contains a segment [c,b~] starting at the same point with
  b~ >= b; the one with the smallest such b~ is consumed (ties are exact
  duplicates, hence interchangeable);
* the consumed segment leaves the remainder [b+2,b~] (nothing when b~ = b);
* if the remainder is linked with other segments, each linked pair involving
  a newly created segment is replaced by its union together with its
  intersection when nonempty, repeated to closure. The replacement is forced:
  the derivative of a generic parameter is generic, so the raw multiset must
  be reassembled into unlinked shape. Pairs of two untouched segments are
  never merged (adjacent formal pairs in the input stay as they are).
  The closure terminates because the sum of squared segment lengths strictly
  increases at each merge while the covered points stay fixed.

The left side mirrors this with left endpoints: d = [a,e] consumes [a~,e]
with the largest a~ <= a, leaving [a~,a-2].

On ZSegment(<[x,y]>) only the outermost points move: the right derivative is
nonzero only for d = [y,y] (giving <[x,y-2]>, or the empty GenericSt when x =
y), the left one only for d = [x,x]. Integrals extend by one point:
I^L_[x-2,x-2] and I^R_[y+2,y+2] are the only supported ones.

A derivative along a different line is zero; an integral along one is
supported on GenericSt exactly when the insertion stays unlinked (it always
does across lines).
"""

from __future__ import annotations

from enum import Enum

from .errors import UnsupportedDomain, ZeroRepInput
from .reps import GenericSt, RepParam, ZERO, ZSegment, ZeroRep, make_generic
from .segments import (
    EMPTY,
    Multisegment,
    Segment,
    SegmentRelation,
    canonical_admissible_order,
    intersection_of,
    relation,
    union_of,
)

__all__ = [
    'Side',
    'chain_order',
    'derive',
    'integrate',
    'derive_multi',
    'integrate_multi',
]


class Side(Enum):
    L = 'L'
    R = 'R'


def derive(pi: RepParam, d: Segment, side: Side) -> RepParam:
    """Apply the one-segment derivative; returns ZERO when it vanishes."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('derivative of the zero parameter')
    if isinstance(pi, GenericSt):
        return _derive_generic(pi.segments, d, side)
    return _derive_zseg(pi.segment, d, side)


def integrate(pi: RepParam, d: Segment, side: Side) -> RepParam:
    """Apply the one-segment integral; partial, never zero-valued."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('integral of the zero parameter')
    if isinstance(pi, GenericSt):
        extended = pi.segments.add(d)
        if not extended.pairwise_unlinked():
            raise UnsupportedDomain(
                f'inserting {d} into {pi.segments} leaves the generic class'
            )
        # both sides insert the same segment; side only names the functor
        return GenericSt(extended)
    x, y = pi.segment.a, pi.segment.b
    line = pi.segment.line
    if side is Side.L and d == Segment(line, x - 2, x - 2):
        return ZSegment(Segment(line, x - 2, y))
    if side is Side.R and d == Segment(line, y + 2, y + 2):
        return ZSegment(Segment(line, x, y + 2))
    raise UnsupportedDomain(f'integral by {d} is not supported on {pi}')


def _derive_generic(m: Multisegment, d: Segment, side: Side) -> RepParam:
    if side is Side.R:
        candidates = [t for t in m if t.line == d.line and t.a == d.a and t.b >= d.b]
        if not candidates:
            return ZERO
        consumed = min(candidates, key=lambda t: t.b)
        leftover = (
            Segment(d.line, d.b + 2, consumed.b) if consumed.b > d.b else None
        )
    else:
        candidates = [t for t in m if t.line == d.line and t.b == d.b and t.a <= d.a]
        if not candidates:
            return ZERO
        consumed = max(candidates, key=lambda t: t.a)
        leftover = (
            Segment(d.line, consumed.a, d.a - 2) if consumed.a < d.a else None
        )
    rest = m.remove_one(consumed)
    items = _merge_closure(rest.items, [leftover] if leftover is not None else [])
    return make_generic(Multisegment(items), allow_adjacent=True)


def _derive_zseg(seg: Segment, d: Segment, side: Side) -> RepParam:
    if side is Side.R:
        hit = d.line == seg.line and d.a == seg.b and d.b == seg.b
        if not hit:
            return ZERO
        if seg.a == seg.b:
            return GenericSt(EMPTY)
        return ZSegment(Segment(seg.line, seg.a, seg.b - 2))
    hit = d.line == seg.line and d.a == seg.a and d.b == seg.a
    if not hit:
        return ZERO
    if seg.a == seg.b:
        return GenericSt(EMPTY)
    return ZSegment(Segment(seg.line, seg.a + 2, seg.b))


def _merge_closure(
    old_items: tuple[Segment, ...], fresh: list[Segment]
) -> tuple[Segment, ...]:
    """Merge linked pairs involving fresh segments until none remain."""
    old = list(old_items)
    new = list(fresh)
    while True:
        pairs: list[tuple[tuple, tuple, str, int, int]] = []
        for i, x in enumerate(new):
            for j, y in enumerate(old):
                if relation(x, y) is SegmentRelation.LINKED:
                    pairs.append((x.sort_key(), y.sort_key(), 'old', i, j))
            for j, y in enumerate(new):
                if j != i and relation(x, y) is SegmentRelation.LINKED:
                    pairs.append((x.sort_key(), y.sort_key(), 'new', i, j))
        if not pairs:
            return tuple(old + new)
        _, _, kind, i, j = min(pairs)
        x = new[i]
        y = old[j] if kind == 'old' else new[j]
        merged = [union_of(x, y)]
        inter = intersection_of(x, y)
        if inter is not None:
            merged.append(inter)
        if kind == 'old':
            old.pop(j)
            new.pop(i)
        else:
            for k in sorted((i, j), reverse=True):
                new.pop(k)
        new.extend(merged)


def chain_order(m: Multisegment, mirrored: bool) -> tuple[Segment, ...]:
    """Deterministic composition order for a multisegment chain.

    Right derivatives and left integrals run dominated-segments-first (the
    canonical admissible ordering); their mirror images, left derivatives
    and right integrals, must run in the reversed order so that dualizing a
    chain dualizes it step for step.
    """
    order = canonical_admissible_order(m)
    return tuple(reversed(order)) if mirrored else order


def derive_multi(pi: RepParam, m: Multisegment, side: Side) -> RepParam:
    """Iterated derivative of m, composed in the side's canonical order.

    The value does not depend on which order compatible with the side is
    used; the canonical one makes the computation reproducible. Zero at any
    step makes the whole chain zero.
    """
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('derivative chain on the zero parameter')
    cur = pi
    for d in chain_order(m, mirrored=side is Side.L):
        cur = derive(cur, d, side)
        if isinstance(cur, ZeroRep):
            return ZERO
    return cur


def integrate_multi(pi: RepParam, m: Multisegment, side: Side) -> RepParam:
    """Iterated integral of m, composed in the side's canonical order."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('integral chain on the zero parameter')
    cur = pi
    for d in chain_order(m, mirrored=side is Side.R):
        cur = integrate(cur, d, side)
    return cur
