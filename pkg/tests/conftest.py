"""Shared builders: one self-dual weight-1 line plus a dual pair of lines.

Endpoints everywhere are half-unit integers (the printed exponent is half
the stored one), so a step between consecutive points is 2.
"""

from segops import (
    CuspidalLine,
    Multisegment,
    Segment,
    ZSegment,
    make_generic,
)

R = CuspidalLine('r', 'r', 1)
G = CuspidalLine('g', 'gbar', 1)
GBAR = G.dual()
H2 = CuspidalLine('h', 'h', 2)


def seg(a, b, line=R):
    return Segment(line, a, b)


def ms(*pairs, line=R):
    return Multisegment.of([Segment(line, a, b) for a, b in pairs])


def st(*pairs, line=R):
    return make_generic(ms(*pairs, line=line))


def stx(*pairs, line=R):
    # admits adjacent-linked payloads, matching the St{...} literal form
    return make_generic(ms(*pairs, line=line), allow_adjacent=True)


def z(a, b, line=R):
    return ZSegment(Segment(line, a, b))
