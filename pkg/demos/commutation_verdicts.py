"""When does a right derivative commute with a left integral?

comm_rdli(d1, d2, pi) answers for the triple: derivative by d1, integral by
d2, parameter pi. The verdict carries the deciding reason. When the integral
falls outside the supported domain the predicate falls back on sufficient
criteria and may return Unknown; Unknown is a refusal to guess, not a truth
value.

The last section shows why commutation transfers from a segment to the
shorter segments inside it (same right end) but not the other way around.
"""

from segops import Multisegment, Segment, CuspidalLine, comm_ldri, comm_rdli, make_generic

R = CuspidalLine('r', 'r', 1)


def seg(a, b):
    return Segment(R, a, b)


def st(*pairs):
    return make_generic(Multisegment.of([Segment(R, a, b) for a, b in pairs]))


def check(d1, d2, pi):
    v = comm_rdli(d1, d2, pi)
    print(f'  d1={d1} d2={d2} pi={pi}  ->  {v}')
    return v


def main():
    print('== decided by the eta comparison ==')
    check(seg(2, 4), seg(2, 2), st((2, 4)))
    check(seg(2, 4), seg(2, 6), st((2, 4)))

    print()
    print('== decided without computing the integral ==')
    # supports on the same line never meet
    check(seg(1, 3), seg(7, 7), st((1, 5)))
    # right endpoint dominates, insertion cannot disturb the tower
    check(seg(2, 6), seg(0, 2), st((2, 6)))

    print()
    print('== no criterion applies: Unknown ==')
    check(seg(0, 4), seg(2, 6), st((0, 4), (4, 4)))

    print()
    print('== truth transfers inward, not outward ==')
    pi = st((0, 2), (2, 2))
    print('  parameter', pi)
    narrow = check(seg(2, 2), seg(0, 2), pi)
    wide = check(seg(0, 2), seg(0, 2), pi)
    print(f'  short segment [1,1]: {narrow.outcome.value};'
          f' widened to [0,1]: {wide.outcome.value}')
    print('  the eta tower of [1,1] sits inside the tower of [0,1], so a')
    print('  verdict for the wide segment constrains the short one, never')
    print('  the reverse: the widened tower has an entry the short')
    print('  comparison never looked at, and the insertion moves it.')

    print()
    print('== the mirrored variant ==')
    v = comm_ldri(seg(1, 2), seg(1, 1), st((1, 2)))
    print(f'  left derivative vs right integral: {v}')


if __name__ == '__main__':
    main()
