"""Commutation tests for derivative/integral pairs on a parameter.

The central question: does the right derivative by d1 commute with the left
integral by d2 on pi (and the mirrored/dual variants)? Each predicate
returns a TripleVerdict with a three-valued outcome and the reason that
decided it.

Decision procedure, right-derivative/left-integral form:

1. eps(pi, d1, R) = 0: False (the commutation notion requires a nonzero
   derivative).
2. If the integral I^L_{d2}(pi) is supported, compare the eta vector of d1
   before and after integrating: equal means True, different means False.
   This comparison is a complete test, not a heuristic.
3. If the integral is unsupported, the comparison is unavailable; a list of
   sufficient criteria is tried, each certifying commutation outright:
   same-line endpoint dominance (a1 > a2 or b1 > b2), disjoint cuspidal
   supports, the integral's attachment exponent lying outside the
   derivative segment's support, the derivative's working endpoint lying
   outside the integral segment's support.
4. Otherwise Unknown: truth is not decided either way.

A True verdict does propagate to segments obtained by shortening d1 from
the left (same right end, nonzero epsilon): their eta towers are
sub-towers of the original, so equality is inherited. The reverse
direction, widening d1 leftward, is NOT sound: the widened tower picks up
entries the original never saw, and those can change under the integral.
No criterion here relies on the widening direction.

Criterion order never affects the truth value, only the reported reason.

The dual form compares the eta vector of d2 (left side) on I^L_{d2}(pi)
before and after applying the right derivative by d1; the mirrored form
swaps left and right throughout. All three are implemented independently so
agreement between them is a real cross-check, not a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import UnsupportedDomain, ZeroDerivativeChain, ZeroRepInput
from .invariants import epsilon, eta
from .operators import Side, derive, integrate
from .reps import RepParam, ZeroRep
from .segments import Multisegment, Segment, canonical_admissible_order

__all__ = [
    'Outcome',
    'Reason',
    'TripleVerdict',
    'comm_rdli',
    'comm_dual_rdli',
    'comm_ldri',
    'strong_multi',
]


class Outcome(Enum):
    TRUE = 'true'
    FALSE = 'false'
    UNKNOWN = 'unknown'


class Reason(Enum):
    EPS_ZERO = 'eps-zero'
    ETA_EQUAL = 'eta-equal'
    ETA_DIFFER = 'eta-differ'
    DOMINANT_ENDPOINT = 'dominant-endpoint'
    DISJOINT_SUPPORT = 'disjoint-support'
    INTEGRAL_POINT_OUTSIDE = 'integral-point-outside'
    DERIVATIVE_POINT_OUTSIDE = 'derivative-point-outside'
    # reserved: inherited verdict from a wider segment; no criterion emits it
    SATURATION = 'saturation'
    INTEGRAL_UNSUPPORTED = 'integral-unsupported'


@dataclass(frozen=True)
class TripleVerdict:
    outcome: Outcome
    reason: Reason
    witness: object = None

    @property
    def decisive(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def __str__(self) -> str:
        return f'{self.outcome.value}({self.reason.value})'


def _support_disjoint(d1: Segment, d2: Segment) -> bool:
    if d1.line != d2.line:
        return True
    return not set(d1.points()) & set(d2.points())


def _direct_rdli(d1: Segment, d2: Segment) -> Optional[Reason]:
    """Criteria depending on the two segments only."""
    if d1.line == d2.line and (d1.a > d2.a or d1.b > d2.b):
        return Reason.DOMINANT_ENDPOINT
    if _support_disjoint(d1, d2):
        return Reason.DISJOINT_SUPPORT
    if not (d2.line == d1.line and d2.a in d1.points()):
        return Reason.INTEGRAL_POINT_OUTSIDE
    if not (d1.line == d2.line and d1.b in d2.points()):
        return Reason.DERIVATIVE_POINT_OUTSIDE
    return None


def _direct_ldri(d1: Segment, d2: Segment) -> Optional[Reason]:
    """Mirror of _direct_rdli under the dual (endpoints swap roles)."""
    if d1.line == d2.line and (d1.a < d2.a or d1.b < d2.b):
        return Reason.DOMINANT_ENDPOINT
    if _support_disjoint(d1, d2):
        return Reason.DISJOINT_SUPPORT
    if not (d2.line == d1.line and d2.b in d1.points()):
        return Reason.INTEGRAL_POINT_OUTSIDE
    if not (d1.line == d2.line and d1.a in d2.points()):
        return Reason.DERIVATIVE_POINT_OUTSIDE
    return None


def _criteria_rdli(d1: Segment, d2: Segment) -> TripleVerdict:
    direct = _direct_rdli(d1, d2)
    if direct is not None:
        return TripleVerdict(Outcome.TRUE, direct)
    return TripleVerdict(Outcome.UNKNOWN, Reason.INTEGRAL_UNSUPPORTED)


def _criteria_ldri(d1: Segment, d2: Segment) -> TripleVerdict:
    direct = _direct_ldri(d1, d2)
    if direct is not None:
        return TripleVerdict(Outcome.TRUE, direct)
    return TripleVerdict(Outcome.UNKNOWN, Reason.INTEGRAL_UNSUPPORTED)


def comm_rdli(d1: Segment, d2: Segment, pi: RepParam) -> TripleVerdict:
    """Does the right derivative by d1 commute with the left integral by d2?"""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('commutation test on the zero parameter')
    if epsilon(pi, d1, Side.R) == 0:
        return TripleVerdict(Outcome.FALSE, Reason.EPS_ZERO)
    try:
        extended = integrate(pi, d2, Side.L)
    except UnsupportedDomain:
        return _criteria_rdli(d1, d2)
    before = eta(pi, d1, Side.R)
    after = eta(extended, d1, Side.R)
    if before.values == after.values:
        return TripleVerdict(Outcome.TRUE, Reason.ETA_EQUAL, witness=(before, after))
    return TripleVerdict(Outcome.FALSE, Reason.ETA_DIFFER, witness=(before, after))


def comm_dual_rdli(d1: Segment, d2: Segment, pi: RepParam) -> TripleVerdict:
    """Same question through the dual comparison: the eta vector of d2 on
    the integrated parameter must survive the derivative by d1."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('commutation test on the zero parameter')
    if epsilon(pi, d1, Side.R) == 0:
        return TripleVerdict(Outcome.FALSE, Reason.EPS_ZERO)
    try:
        extended = integrate(pi, d2, Side.L)
    except UnsupportedDomain:
        return _criteria_rdli(d1, d2)
    derived = derive(extended, d1, Side.R)
    # eps on the extension dominates eps on pi, which is nonzero
    assert not isinstance(derived, ZeroRep)
    before = eta(extended, d2, Side.L)
    after = eta(derived, d2, Side.L)
    if before.values == after.values:
        return TripleVerdict(Outcome.TRUE, Reason.ETA_EQUAL, witness=(before, after))
    return TripleVerdict(Outcome.FALSE, Reason.ETA_DIFFER, witness=(before, after))


def comm_ldri(d1: Segment, d2: Segment, pi: RepParam) -> TripleVerdict:
    """Mirror: left derivative by d1 against the right integral by d2."""
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('commutation test on the zero parameter')
    if epsilon(pi, d1, Side.L) == 0:
        return TripleVerdict(Outcome.FALSE, Reason.EPS_ZERO)
    try:
        extended = integrate(pi, d2, Side.R)
    except UnsupportedDomain:
        return _criteria_ldri(d1, d2)
    before = eta(pi, d1, Side.L)
    after = eta(extended, d1, Side.L)
    if before.values == after.values:
        return TripleVerdict(Outcome.TRUE, Reason.ETA_EQUAL, witness=(before, after))
    return TripleVerdict(Outcome.FALSE, Reason.ETA_DIFFER, witness=(before, after))


def strong_multi(m: Multisegment, n: Multisegment, pi: RepParam) -> TripleVerdict:
    """Commutation of the whole right-derivative chain of m with the whole
    left-integral chain of n on pi.

    The right chain along m must be nonzero at every prefix
    (ZeroDerivativeChain otherwise). The verdict aggregates the one-segment
    triples (d_i, d'_j, partial value): any False sub-verdict makes the
    whole False, otherwise any Unknown makes it Unknown, otherwise True
    (vacuously so when there are no sub-triples).
    """
    if isinstance(pi, ZeroRep):
        raise ZeroRepInput('commutation test on the zero parameter')
    m_ord = canonical_admissible_order(m)
    n_ord = canonical_admissible_order(n)
    prefixes: list[RepParam] = [pi]
    cur = pi
    for d in m_ord:
        cur = derive(cur, d, Side.R)
        if isinstance(cur, ZeroRep):
            raise ZeroDerivativeChain(f'derivative chain of {m} dies at {d}')
        prefixes.append(cur)
    subs: list[TripleVerdict] = []
    for idx, di in enumerate(m_ord):
        value: Optional[RepParam] = prefixes[idx]
        for jdx, dj in enumerate(n_ord):
            if value is None:
                subs.append(
                    TripleVerdict(Outcome.UNKNOWN, Reason.INTEGRAL_UNSUPPORTED)
                )
                continue
            subs.append(comm_rdli(di, dj, value))
            if jdx < len(n_ord) - 1:
                try:
                    value = integrate(value, dj, Side.L)
                except UnsupportedDomain:
                    value = None
    for v in subs:
        if v.outcome is Outcome.FALSE:
            return v
    for v in subs:
        if v.outcome is Outcome.UNKNOWN:
            return v
    if subs:
        return TripleVerdict(Outcome.TRUE, subs[0].reason, witness=len(subs))
    return TripleVerdict(Outcome.TRUE, Reason.ETA_EQUAL, witness=0)
