"""Counting invariants of parameters under iterated derivatives.

epsilon(pi, d, side) is the largest k with the k-fold derivative by d
nonzero. eta(pi, d, side) collects the epsilon values of d and its
one-sided shortenings into a vector; comparing such vectors before and
after an integral is the combinatorial commutation test. mx rebuilds the
multisegment of shortenings weighted by their epsilon counts, and hd reads
off the highest-derivative multisegment from epsilon differences; level is
its total size.

epsilon is definitionally iterated application of ``derive``. For strictly
pairwise-unlinked GenericSt payloads it equals a direct count (number of
payload segments with the same starting point reaching at least as far),
which is used as a fast path and cross-checked against iteration in the
test suite. Payloads containing adjacent formal pairs always iterate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidComparison, NegativeMultiplicity, ZeroRepInput
from .operators import Side, derive
from .reps import GenericSt, RepParam, ZSegment, ZeroRep
from .segments import CuspidalLine, Multisegment, Segment

__all__ = [
    'epsilon',
    'epsilon_iterated',
    'EtaVector',
    'eta',
    'eta_compare',
    'eta_is_zero',
    'mx',
    'hd',
    'level',
]


def epsilon(pi: RepParam, d: Segment, side: Side) -> int:
    """Maximal k with derive applied k times by d still nonzero."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('epsilon of the zero parameter')
    return _epsilon_cached(pi, d, side)


@lru_cache(maxsize=None)
def _epsilon_cached(pi: RepParam, d: Segment, side: Side) -> int:
    if isinstance(pi, ZSegment):
        seg = pi.segment
        if side is Side.R:
            return 1 if d == Segment(seg.line, seg.b, seg.b) else 0
        return 1 if d == Segment(seg.line, seg.a, seg.a) else 0
    assert isinstance(pi, GenericSt)
    m = pi.segments
    if m.pairwise_unlinked():
        if side is Side.R:
            return sum(
                1 for t in m if t.line == d.line and t.a == d.a and t.b >= d.b
            )
        return sum(1 for t in m if t.line == d.line and t.b == d.b and t.a <= d.a)
    return epsilon_iterated(pi, d, side)


def epsilon_iterated(pi: RepParam, d: Segment, side: Side) -> int:
    """Reference implementation: count successful derive applications."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('epsilon of the zero parameter')
    count = 0
    cur = pi
    while True:
        cur = derive(cur, d, side)
        if isinstance(cur, ZeroRep):
            return count
        count += 1


@dataclass(frozen=True)
class EtaVector:
    """Epsilon profile of a segment and its one-sided shortenings.

    For the right side of base [a,b] the entries are
    (eps([a,b]), eps([a+2,b]), ..., eps([b,b])); for the left side
    (eps([a,b]), eps([a,b-2]), ..., eps([a,a])). Comparisons are entrywise
    and only defined between vectors with the same base and side.
    """

    base: Segment
    side: Side
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        assert len(self.values) == self.base.num_points()

    def __str__(self) -> str:
        return f'eta^{self.side.value}_{self.base}{self.values}'


def _eta_tails(d: Segment, side: Side) -> list[Segment]:
    if side is Side.R:
        return [Segment(d.line, a, d.b) for a in range(d.a, d.b + 1, 2)]
    return [Segment(d.line, d.a, b) for b in range(d.b, d.a - 1, -2)]


def eta(pi: RepParam, d: Segment, side: Side) -> EtaVector:
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('eta of the zero parameter')
    values = tuple(epsilon(pi, t, side) for t in _eta_tails(d, side))
    return EtaVector(d, side, values)


def eta_compare(u: EtaVector, v: EtaVector, op: str) -> bool:
    """Entrywise comparison; strict forms mean weak plus not equal."""
    if u.base != v.base or u.side != v.side or len(u.values) != len(v.values):
        raise InvalidComparison(f'cannot compare {u} with {v}')
    if op == '==':
        return u.values == v.values
    if op == '<=':
        return all(a <= b for a, b in zip(u.values, v.values))
    if op == '>=':
        return all(a >= b for a, b in zip(u.values, v.values))
    if op == '<':
        return u.values != v.values and eta_compare(u, v, '<=')
    if op == '>':
        return u.values != v.values and eta_compare(u, v, '>=')
    raise InvalidComparison(f'unknown comparison operator {op!r}')


def eta_is_zero(u: EtaVector) -> bool:
    return all(x == 0 for x in u.values)


def mx(pi: RepParam, d: Segment, side: Side) -> Multisegment:
    """Shortenings of d, each with multiplicity epsilon; empty iff eta is zero."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('mx of the zero parameter')
    out: list[Segment] = []
    for t in _eta_tails(d, side):
        out.extend([t] * epsilon(pi, t, side))
    return Multisegment.of(out)


def hd(pi: RepParam) -> Multisegment:
    """Highest-derivative multisegment, from right-side epsilon differences.

    The multiplicity of [p, p+2c] is eps([p,p+2c]) - eps([p,p+2c+2]); a
    negative difference cannot occur for the supported parameter classes and
    raises NegativeMultiplicity if it ever does.
    """
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('hd of the zero parameter')
    return _hd_from_eps(pi, lambda seg: epsilon(pi, seg, Side.R))


def _hd_from_eps(pi: RepParam, eps) -> Multisegment:
    lines: dict[str, CuspidalLine] = {}
    points: set[tuple[str, int]] = set()
    segs = (
        pi.segments.items if isinstance(pi, GenericSt) else (pi.segment,)
    )
    for seg in segs:
        lines[seg.line.name] = seg.line
        for p in seg.points():
            points.add((seg.line.name, p))
    out: list[Segment] = []
    for line_name, p in sorted(points):
        line = lines[line_name]
        top = max(q for ln, q in points if ln == line_name and (q - p) % 2 == 0)
        for b in range(p, top + 1, 2):
            mult = eps(Segment(line, p, b)) - eps(Segment(line, p, b + 2))
            if mult < 0:
                raise NegativeMultiplicity(
                    f'epsilon difference negative at [{p},{b}] on line {line_name}'
                )
            out.extend([Segment(line, p, b)] * mult)
    return Multisegment.of(out)


def level(pi: RepParam) -> int:
    """Total size of the highest-derivative multisegment."""
    return hd(pi).l_abs()
