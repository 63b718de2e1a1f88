"""Tour of the basic objects: segments, parameters, operators, invariants.

Endpoints are stored in half-units (the printed exponent is half the stored
integer), so whole-exponent points step by 2 internally and a printed segment
like [0,2] covers the exponents 0, 1, 2.
"""

from segops import (
    CuspidalLine,
    Multisegment,
    Segment,
    Side,
    ZSegment,
    derive,
    dual_rep,
    epsilon,
    eta,
    hd,
    integrate,
    level,
    make_generic,
    mx,
)

R = CuspidalLine('r', 'r', 1)


def seg(a, b):
    return Segment(R, a, b)


def show(label, value):
    print(f'{label:<38} {value}')


def main():
    print('== segments and multisegments ==')
    d = seg(0, 4)
    show('segment [0,2] (points 0,1,2)', d)
    show('its points (half-units)', list(d.points()))
    m = Multisegment.of([seg(0, 4), seg(2, 2)])
    show('multisegment', m)
    show('total size', m.l_abs())

    print()
    print('== parameters: generic and degenerate ==')
    pi = make_generic(m)
    show('St of the payload', pi)
    zee = ZSegment(seg(0, 4))
    show('Zelevinsky segment parameter', zee)
    show('dual of the generic parameter', dual_rep(pi))
    show('dual of the degenerate one', dual_rep(zee))

    print()
    print('== derivatives and integrals are inverse ==')
    smaller = derive(pi, seg(0, 4), Side.R)
    show('D_R by [0,2]', smaller)
    back = integrate(smaller, seg(0, 4), Side.R)
    show('I_R by [0,2] undoes it', back)

    print()
    print('== counting invariants ==')
    show('eps of [0,2] on the right', epsilon(pi, seg(0, 4), Side.R))
    show('eta tower of [0,2]', eta(pi, seg(0, 4), Side.R))
    show('max extraction mx', mx(pi, seg(0, 4), Side.R))
    show('head multisegment hd', hd(pi))
    show('level (size of hd)', level(pi))
    show('hd of the Zelevinsky parameter', hd(zee))
    show('its level', level(zee))


if __name__ == '__main__':
    main()
