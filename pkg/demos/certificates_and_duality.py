"""Commuting removal certificates between parameters of adjacent sizes.

A certificate for (pi, pi2) is a pair of multisegments (m, n): stripping m
from the right of the half-twisted pi and stripping n from the left of pi2
land on the same value, with the two chains commuting strongly. The search
enumerates every candidate; dualize_certificate transports a certificate to
the dual pair and re-verifies it from scratch.
"""

from segops import Segment, CuspidalLine
from segops.branching import dualize_certificate, example_suite, find_certificates

R = CuspidalLine('r', 'r', 1)
G = CuspidalLine('g', 'gbar', 1)


def main():
    print('== worked families ==')
    for label, args in [
        ('trivial, size 4 over size 3', ('trivial', 3)),
        ('single segments, disjoint lines', ('rankin_selberg', Segment(R, 0, 4), Segment(G, 0, 2))),
        ('adjacent pair against full segment', ('qa_example', 4, 2)),
    ]:
        pi, pi2, cert = example_suite(*args)
        print(f'  {label}:')
        print(f'    pi={pi}  pi2={pi2}')
        print(f'    certificate {cert}')

    print()
    print('== exhaustive search finds them too ==')
    pi, pi2, cert = example_suite('qa_example', 4, 2)
    result = find_certificates(pi, pi2)
    for c in result.certificates:
        print(f'  found {c}')
    if result.unknowns:
        print(f'  plus {len(result.unknowns)} undecided candidates')

    print()
    print('== duality round trip ==')
    pi, pi2, cert = example_suite('trivial', 3)
    flipped = dualize_certificate(cert, pi, pi2)
    print(f'  original   {cert}')
    print(f'  dualized   {flipped}')
    back = dualize_certificate(flipped, pi2.dual_pair(pi)[0], pi2.dual_pair(pi)[1]) \
        if hasattr(pi2, 'dual_pair') else None
    # the transport is an involution on the certificate data
    from segops import dual_rep
    again = dualize_certificate(flipped, dual_rep(pi2), dual_rep(pi))
    print(f'  and back   {again}')
    assert again.m == cert.m and again.n == cert.n


if __name__ == '__main__':
    main()
